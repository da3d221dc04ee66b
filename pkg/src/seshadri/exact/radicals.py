"""
Real radicals ``offset + scale * radicand ** (1/index)`` and root helpers.

A :class:`Radical` is always stored in canonical form. The radicand is an
integer greater than 1 and free of index-th powers, and the index is
minimal. Anything that simplifies further becomes a ``Fraction`` (perfect
powers) or a :class:`QuadExt` (square roots), so a surviving ``Radical`` has
algebraic degree at least 3 and never equals a quadratic surd.
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Union

from sympy import factorint, integer_nthroot

from seshadri.errors import DomainError
from seshadri.exact.interval import DEFAULT_PRECISION, RationalInterval, root_bracket
from seshadri.exact.quadratic import Ordering, QuadExt, RationalLike

logger = logging.getLogger(__name__)

ExactValue = Union[Fraction, QuadExt, "Radical"]


def sqrt_floor(n: int) -> int:
    if n < 0:
        raise DomainError(f"sqrt_floor expects n >= 0, got {n}")
    return math.isqrt(n)


def binomial(n: int, k: int) -> int:
    if n < 0 or k < 0:
        raise DomainError(f"binomial expects non-negative arguments, got ({n}, {k})")
    return math.comb(n, k)


def perfect_root(value: Fraction, index: int) -> Fraction | None:
    """The exact rational ``index``-th root of ``value >= 0``, or ``None``."""
    num_root, num_exact = integer_nthroot(value.numerator, index)
    if not num_exact:
        return None
    den_root, den_exact = integer_nthroot(value.denominator, index)
    if not den_exact:
        return None
    return Fraction(int(num_root), int(den_root))


@dataclass(frozen=True)
class Radical:
    """Canonical ``offset + scale * radicand ** (1/index)`` with ``index >= 3``."""

    offset: Fraction
    scale: Fraction
    radicand: int
    index: int

    @classmethod
    def build(
        cls,
        radicand: RationalLike,
        index: int,
        scale: RationalLike = 1,
        offset: RationalLike = 0,
    ) -> ExactValue:
        """Canonicalize and return the simplest exact representation."""
        rho, scale, offset = Fraction(radicand), Fraction(scale), Fraction(offset)
        if index < 1:
            raise DomainError(f"root index must be >= 1, got {index}")
        if rho < 0:
            raise DomainError(f"real root of negative radicand {rho}")
        if rho == 0 or scale == 0:
            return offset
        # rho**(1/k) = (num * den**(k-1))**(1/k) / den
        integer = rho.numerator * rho.denominator ** (index - 1)
        scale /= rho.denominator
        exponents: dict[int, int] = {}
        for prime, exponent in factorint(integer).items():
            scale *= prime ** (exponent // index)
            if exponent % index:
                exponents[prime] = exponent % index
        if not exponents:
            return offset + scale
        common = reduce(math.gcd, exponents.values(), index)
        index //= common
        inner = math.prod(prime ** (exponent // common) for prime, exponent in exponents.items())
        if index == 2:
            return QuadExt(offset, scale, inner)
        return cls(offset, scale, inner, index)

    def enclose(self, precision: RationalLike = DEFAULT_PRECISION) -> RationalInterval:
        bracket = root_bracket(Fraction(self.radicand), self.index, Fraction(precision) / abs(self.scale))
        return self.offset + self.scale * bracket

    def compare_rational(self, value: RationalLike) -> Ordering:
        """Exact ordering of this radical against a rational."""
        threshold = (Fraction(value) - self.offset) / self.scale
        # root = radicand**(1/index) > 0 is compared with threshold
        if threshold <= 0:
            root_vs = Ordering.GREATER
        else:
            root_vs = Ordering.of(self.radicand - threshold**self.index)
        return root_vs if self.scale > 0 else Ordering(-root_vs)

    def reciprocal(self) -> ExactValue:
        if self.offset != 0:
            raise DomainError("reciprocal is only exact for radicals without offset")
        return Radical.build(Fraction(1, self.radicand), self.index, 1 / self.scale)

    def __neg__(self) -> Radical:
        return Radical(-self.offset, -self.scale, self.radicand, self.index)

    def __add__(self, other: object) -> Radical:
        if isinstance(other, QuadExt) and other.is_rational:
            other = other.p
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return Radical(self.offset + other, self.scale, self.radicand, self.index)

    __radd__ = __add__

    def __sub__(self, other: object) -> Radical:
        if not isinstance(other, (int, Fraction, QuadExt)):
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other: object) -> Radical:
        return (-self) + other

    def __mul__(self, other: object) -> ExactValue:
        if isinstance(other, QuadExt) and other.is_rational:
            other = other.p
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        if other == 0:
            return Fraction(0)
        return Radical(self.offset * other, self.scale * other, self.radicand, self.index)

    __rmul__ = __mul__

    def __truediv__(self, other: object) -> ExactValue:
        if isinstance(other, QuadExt) and other.is_rational:
            other = other.p
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        return self * (1 / Fraction(other))

    def __rtruediv__(self, other: object) -> ExactValue:
        if isinstance(other, QuadExt) and other.is_rational:
            other = other.p
        if not isinstance(other, (int, Fraction)):
            return NotImplemented
        reciprocal = self.reciprocal()
        return reciprocal * Fraction(other)

    def __lt__(self, other: object) -> bool:
        from seshadri.exact.ordering import compare

        return compare(self, other) is Ordering.LESS

    def __le__(self, other: object) -> bool:
        from seshadri.exact.ordering import compare

        return compare(self, other) is not Ordering.GREATER

    def __gt__(self, other: object) -> bool:
        from seshadri.exact.ordering import compare

        return compare(self, other) is Ordering.GREATER

    def __ge__(self, other: object) -> bool:
        from seshadri.exact.ordering import compare

        return compare(self, other) is not Ordering.LESS

    def __float__(self) -> float:
        return float(self.enclose(Fraction(1, 10**18)).mid)

    def __str__(self) -> str:
        from seshadri.exact.formatting import format_number

        return format_number(self)


def nth_root(
    x: RationalLike,
    n: int,
    precision: RationalLike = DEFAULT_PRECISION,
) -> Fraction | QuadExt | RationalInterval:
    """Real ``n``-th root of a non-negative rational.

    Perfect powers come back as ``Fraction``, square roots as ``QuadExt``,
    anything else as a certified enclosure of width at most ``precision``.
    """
    x = Fraction(x)
    if x < 0:
        raise DomainError(f"nth_root of negative value {x}")
    if n < 1:
        raise DomainError(f"root index must be >= 1, got {n}")
    exact = perfect_root(x, n)
    if exact is not None:
        return exact
    if n == 2:
        return QuadExt.sqrt(x)
    return root_bracket(x, n, Fraction(precision))
