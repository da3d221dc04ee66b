"""
Quadratic surds ``p + q*sqrt(d)`` with rational ``p, q`` and squarefree ``d``.

Values are normalized on construction:
- ``q == 0`` or ``d == 0`` folds to a plain rational (``q = d = 0``)
- perfect square factors of ``d`` move into ``q``
- ``d == 1`` folds ``q`` into ``p``

Arithmetic is closed inside a single field Q(sqrt(d)). Combining two
different radicands raises :class:`MixedRadicandError`; ordering across
radicands is always exact via :func:`quad_compare_mixed`.
"""

from __future__ import annotations

import logging
from enum import IntEnum
from fractions import Fraction
from functools import lru_cache, total_ordering
from typing import Union

from sympy import factorint

from seshadri.errors import DomainError, MixedRadicandError

logger = logging.getLogger(__name__)

Rational = Fraction
RationalLike = Union[Fraction, int]


class Ordering(IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @classmethod
    def of(cls, value: int) -> Ordering:
        return cls((value > 0) - (value < 0))


@lru_cache(maxsize=4096)
def squarefree_part(n: int) -> tuple[int, int]:
    """Split ``n >= 0`` as ``s**2 * d`` with ``d`` squarefree; returns ``(s, d)``."""
    if n < 0:
        raise DomainError(f"squarefree_part expects n >= 0, got {n}")
    if n == 0:
        return 0, 0
    s, d = 1, 1
    for prime, exponent in factorint(n).items():
        s *= prime ** (exponent // 2)
        if exponent % 2:
            d *= prime
    return s, d


def _fraction_sign(x: Fraction) -> int:
    return (x > 0) - (x < 0)


@total_ordering
class QuadExt:
    """An element ``p + q*sqrt(d)`` of a real quadratic field (or of Q)."""

    __slots__ = ("_d", "_p", "_q")

    def __init__(self, p: RationalLike | str = 0, q: RationalLike | str = 0, d: int = 0):
        p, q = Fraction(p), Fraction(q)
        if d < 0:
            raise DomainError(f"radicand must be non-negative, got {d}")
        if q == 0 or d == 0:
            q, d = Fraction(0), 0
        else:
            s, d = squarefree_part(d)
            q *= s
            if d == 1:
                p, q, d = p + q, Fraction(0), 0
        self._p = p
        self._q = q
        self._d = d

    @property
    def p(self) -> Fraction:
        return self._p

    @property
    def q(self) -> Fraction:
        return self._q

    @property
    def d(self) -> int:
        return self._d

    @classmethod
    def coerce(cls, value: QuadExt | RationalLike | str) -> QuadExt:
        if isinstance(value, QuadExt):
            return value
        if isinstance(value, str):
            from seshadri.exact.formatting import parse_number

            parsed = parse_number(value)
            if not isinstance(parsed, (QuadExt, Fraction)):
                raise DomainError(f"{value!r} is not a quadratic surd")
            return cls.coerce(parsed)
        if isinstance(value, float):
            raise DomainError("floats are not exact; pass a Fraction or a string")
        return cls(value)

    @classmethod
    def sqrt(cls, n: RationalLike) -> QuadExt:
        """Exact square root of a non-negative rational."""
        n = Fraction(n)
        if n < 0:
            raise DomainError(f"sqrt of negative value {n}")
        # sqrt(a/b) = sqrt(a*b)/b
        return cls(0, Fraction(1, n.denominator), n.numerator * n.denominator)

    # --- structure ---------------------------------------------------------

    @property
    def is_rational(self) -> bool:
        return self._d == 0

    def as_fraction(self) -> Fraction:
        if not self.is_rational:
            raise DomainError(f"{self} is irrational")
        return self._p

    def conjugate(self) -> QuadExt:
        return QuadExt(self._p, -self._q, self._d)

    def norm(self) -> Fraction:
        return self._p * self._p - self._q * self._q * self._d

    def sign(self) -> int:
        return quad_sign(self)

    def _field(self, other: QuadExt) -> int:
        if self._d == other._d or other._d == 0:
            return self._d
        if self._d == 0:
            return other._d
        raise MixedRadicandError(self._d, other._d)

    # --- arithmetic --------------------------------------------------------

    def __add__(self, other: object) -> QuadExt:
        if not isinstance(other, (QuadExt, int, Fraction)):
            return NotImplemented
        other = QuadExt.coerce(other)
        d = self._field(other)
        return QuadExt(self._p + other._p, self._q + other._q, d)

    __radd__ = __add__

    def __neg__(self) -> QuadExt:
        return QuadExt(-self._p, -self._q, self._d)

    def __pos__(self) -> QuadExt:
        return self

    def __sub__(self, other: object) -> QuadExt:
        if not isinstance(other, (QuadExt, int, Fraction)):
            return NotImplemented
        return self + (-QuadExt.coerce(other))

    def __rsub__(self, other: object) -> QuadExt:
        if not isinstance(other, (QuadExt, int, Fraction)):
            return NotImplemented
        return QuadExt.coerce(other) - self

    def __mul__(self, other: object) -> QuadExt:
        if not isinstance(other, (QuadExt, int, Fraction)):
            return NotImplemented
        other = QuadExt.coerce(other)
        d = self._field(other)
        p = self._p * other._p + self._q * other._q * d
        q = self._p * other._q + self._q * other._p
        return QuadExt(p, q, d)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> QuadExt:
        if not isinstance(other, (QuadExt, int, Fraction)):
            return NotImplemented
        other = QuadExt.coerce(other)
        self._field(other)
        norm = other.norm()
        if norm == 0:
            raise ZeroDivisionError(f"division of {self} by zero")
        numerator = self * other.conjugate()
        return QuadExt(numerator._p / norm, numerator._q / norm, numerator._d)

    def __rtruediv__(self, other: object) -> QuadExt:
        if not isinstance(other, (QuadExt, int, Fraction)):
            return NotImplemented
        return QuadExt.coerce(other) / self

    def __pow__(self, exponent: int) -> QuadExt:
        if not isinstance(exponent, int):
            return NotImplemented
        if exponent < 0:
            return QuadExt(1) / (self**-exponent)
        result = QuadExt(1)
        base = self
        while exponent:
            if exponent & 1:
                result = result * base
            base = base * base
            exponent >>= 1
        return result

    def __abs__(self) -> QuadExt:
        return -self if quad_sign(self) < 0 else self

    # --- ordering ----------------------------------------------------------

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            return self._d == 0 and self._p == other
        if not isinstance(other, QuadExt):
            return NotImplemented
        return (self._p, self._q, self._d) == (other._p, other._q, other._d)

    def __hash__(self) -> int:
        if self._d == 0:
            return hash(self._p)
        return hash((self._p, self._q, self._d))

    def __lt__(self, other: object) -> bool:
        if not isinstance(other, (QuadExt, int, Fraction)):
            return NotImplemented
        return quad_compare_mixed(self, QuadExt.coerce(other)) is Ordering.LESS

    def __float__(self) -> float:
        if self._d == 0:
            return float(self._p)
        from seshadri.exact.interval import enclose

        return float(enclose(self, Fraction(1, 10**18)).mid)

    def __bool__(self) -> bool:
        return self._p != 0 or self._q != 0

    def __repr__(self) -> str:
        return f"QuadExt({self})"

    def __str__(self) -> str:
        from seshadri.exact.formatting import format_number

        return format_number(self)


def quad_sign(x: QuadExt) -> int:
    """Exact sign of ``p + q*sqrt(d)``."""
    sp = _fraction_sign(x.p)
    sq = _fraction_sign(x.q)
    if sq == 0:
        return sp
    if sp == 0 or sp == sq:
        return sq
    # opposite signs: the larger of p**2 and q**2*d wins
    diff = x.p * x.p - x.q * x.q * x.d
    if diff == 0:
        return 0
    return sp if diff > 0 else sq


def quad_compare_mixed(x: QuadExt | RationalLike, y: QuadExt | RationalLike) -> Ordering:
    """Exact ordering of two surds, possibly over different radicands.

    Within one field the sign of the difference decides. Across fields,
    ``x - y = A - C`` with ``A = (px - py) + qx*sqrt(dx)`` and
    ``C = qy*sqrt(dy)``; signs of ``A`` and ``C`` decide unless they agree,
    in which case ``A**2`` and the rational ``C**2`` are compared.
    """
    x, y = QuadExt.coerce(x), QuadExt.coerce(y)
    if x.d == y.d or x.d == 0 or y.d == 0:
        return Ordering.of(quad_sign(x - y))
    a = QuadExt(x.p - y.p, x.q, x.d)
    c_sign = _fraction_sign(y.q)
    a_sign = quad_sign(a)
    if a_sign != c_sign:
        return Ordering.of(a_sign - c_sign)
    c_squared = y.q * y.q * y.d
    squares = quad_sign(a * a - c_squared)
    if squares == 0:
        # A = ±C across independent radicands is impossible for a nonzero C
        logger.warning("degenerate mixed comparison %s vs %s", x, y)
    return Ordering.of(squares * a_sign)
