"""
Closed rational intervals used as certified enclosures.

Intervals are the fallback representation whenever a value leaves every
single quadratic field (mixed radicands, higher roots). All endpoints are
exact rationals, so an enclosure is a proof, never an estimate.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import TYPE_CHECKING, Union

from sympy import integer_nthroot

from seshadri.errors import DomainError, MixedRadicandError
from seshadri.exact.quadratic import QuadExt, RationalLike

if TYPE_CHECKING:
    from seshadri.exact.radicals import Radical

logger = logging.getLogger(__name__)

DEFAULT_PRECISION = Fraction(1, 10**12)


class RationalInterval:
    """The closed interval ``[lo, hi]`` with rational endpoints."""

    __slots__ = ("_hi", "_lo")

    def __init__(self, lo: RationalLike | str, hi: RationalLike | str | None = None):
        lo = Fraction(lo)
        hi = lo if hi is None else Fraction(hi)
        if lo > hi:
            raise DomainError(f"empty interval [{lo}, {hi}]")
        self._lo = lo
        self._hi = hi

    @property
    def lo(self) -> Fraction:
        return self._lo

    @property
    def hi(self) -> Fraction:
        return self._hi

    @property
    def width(self) -> Fraction:
        return self._hi - self._lo

    @property
    def mid(self) -> Fraction:
        return (self._lo + self._hi) / 2

    def contains(self, value: RationalLike) -> bool:
        return self._lo <= value <= self._hi

    def certainly_positive(self) -> bool:
        return self._lo > 0

    def certainly_negative(self) -> bool:
        return self._hi < 0

    def overlaps(self, other: RationalInterval) -> bool:
        return self._lo <= other._hi and other._lo <= self._hi

    @staticmethod
    def _lift(value: object) -> RationalInterval | None:
        if isinstance(value, RationalInterval):
            return value
        if isinstance(value, (int, Fraction)):
            return RationalInterval(value)
        return None

    def __add__(self, other: object) -> RationalInterval:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return RationalInterval(self._lo + rhs._lo, self._hi + rhs._hi)

    __radd__ = __add__

    def __neg__(self) -> RationalInterval:
        return RationalInterval(-self._hi, -self._lo)

    def __sub__(self, other: object) -> RationalInterval:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        return self + (-rhs)

    def __rsub__(self, other: object) -> RationalInterval:
        lhs = self._lift(other)
        if lhs is None:
            return NotImplemented
        return lhs - self

    def __mul__(self, other: object) -> RationalInterval:
        rhs = self._lift(other)
        if rhs is None:
            return NotImplemented
        products = (
            self._lo * rhs._lo,
            self._lo * rhs._hi,
            self._hi * rhs._lo,
            self._hi * rhs._hi,
        )
        return RationalInterval(min(products), max(products))

    __rmul__ = __mul__

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RationalInterval):
            return NotImplemented
        return self._lo == other._lo and self._hi == other._hi

    def __hash__(self) -> int:
        return hash((self._lo, self._hi))

    def __repr__(self) -> str:
        return f"RationalInterval({self})"

    def __str__(self) -> str:
        return f"[{self._lo}, {self._hi}]"


def root_bracket(radicand: Fraction, index: int, precision: Fraction) -> RationalInterval:
    """Enclose ``radicand ** (1/index)`` in an interval of width at most ``precision``."""
    if radicand < 0:
        raise DomainError(f"real root of negative radicand {radicand}")
    if precision <= 0:
        raise DomainError("precision must be positive")
    denom = math.ceil(1 / precision)
    scaled = math.floor(radicand * denom**index)
    root, exact = integer_nthroot(scaled, index)
    root = int(root)
    lo = Fraction(root, denom)
    if exact and lo**index == radicand:
        return RationalInterval(lo)
    return RationalInterval(lo, Fraction(root + 1, denom))


def enclose(
    value: Union[QuadExt, Radical, RationalInterval, RationalLike],
    precision: RationalLike = DEFAULT_PRECISION,
) -> RationalInterval:
    """A rational interval of width at most ``precision`` containing ``value``."""
    from seshadri.exact.radicals import Radical

    precision = Fraction(precision)
    if isinstance(value, RationalInterval):
        return value
    if isinstance(value, (int, Fraction)):
        return RationalInterval(value)
    if isinstance(value, QuadExt):
        if value.is_rational:
            return RationalInterval(value.p)
        scale = abs(value.q)
        root = root_bracket(Fraction(value.d), 2, precision / scale)
        return value.p + value.q * root
    if isinstance(value, Radical):
        return value.enclose(precision)
    raise TypeError(f"cannot enclose {type(value).__name__}")


def mixed_sum(
    *values: Union[QuadExt, Radical, RationalInterval, RationalLike],
    precision: RationalLike = DEFAULT_PRECISION,
) -> QuadExt | RationalInterval:
    """Sum exactly when all summands share a field, otherwise as an enclosure."""
    if all(isinstance(value, (QuadExt, int, Fraction)) for value in values):
        try:
            total = QuadExt(0)
            for value in values:
                total = total + value
            return total
        except MixedRadicandError:
            pass
    share = Fraction(precision) / max(len(values), 1)
    logger.debug("mixed_sum falling back to intervals over %d terms", len(values))
    result = RationalInterval(0)
    for value in values:
        result = result + enclose(value, share)
    return result
