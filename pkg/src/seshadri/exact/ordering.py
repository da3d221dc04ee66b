"""Exact ordering, floors and decimal rendering across all exact value kinds."""

from __future__ import annotations

import logging
import math
from decimal import Decimal, localcontext
from fractions import Fraction
from typing import Union

from seshadri.errors import DomainError
from seshadri.exact.interval import RationalInterval, enclose
from seshadri.exact.quadratic import Ordering, QuadExt, quad_compare_mixed
from seshadri.exact.radicals import Radical

logger = logging.getLogger(__name__)

Exact = Union[Fraction, int, QuadExt, Radical]

# enclosure width shrinks by 2**64 per round
MAX_REFINEMENTS = 64


def _as_rational(value: Exact) -> Fraction | None:
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, QuadExt) and value.is_rational:
        return value.p
    return None


def _compare_radicals(x: Radical, y: Radical) -> Ordering | None:
    if x == y:
        return Ordering.EQUAL
    if x.offset != y.offset:
        return None
    if (x.scale > 0) != (y.scale > 0):
        return Ordering.GREATER if x.scale > 0 else Ordering.LESS
    power = math.lcm(x.index, y.index)
    left = abs(x.scale) ** power * Fraction(x.radicand) ** (power // x.index)
    right = abs(y.scale) ** power * Fraction(y.radicand) ** (power // y.index)
    order = Ordering.of((left > right) - (left < right))
    return order if x.scale > 0 else Ordering(-order)


def _refine(x: Exact, y: Exact) -> Ordering:
    precision = Fraction(1, 2**8)
    for _ in range(MAX_REFINEMENTS):
        left, right = enclose(x, precision), enclose(y, precision)
        if left.hi < right.lo:
            return Ordering.LESS
        if right.hi < left.lo:
            return Ordering.GREATER
        precision /= 2**64
    raise DomainError(f"could not separate {x} and {y}")


def compare(x: Exact | RationalInterval, y: Exact | RationalInterval) -> Ordering:
    """Exact ordering of two values.

    Surds and rationals compare in closed form; radicals compare by raising
    to a common power when their offsets agree, and otherwise by interval
    refinement, which terminates because canonical radicals of distinct
    value never coincide. Intervals compare only when they are disjoint.
    """
    if isinstance(x, RationalInterval) or isinstance(y, RationalInterval):
        left, right = enclose(x), enclose(y)
        if left.hi < right.lo:
            return Ordering.LESS
        if right.hi < left.lo:
            return Ordering.GREATER
        if left.width == 0 and left == right:
            return Ordering.EQUAL
        raise DomainError(f"intervals {left} and {right} overlap")
    if not isinstance(x, Radical) and not isinstance(y, Radical):
        return quad_compare_mixed(x, y)
    rx, ry = _as_rational(x), _as_rational(y)
    if isinstance(x, Radical) and ry is not None:
        return x.compare_rational(ry)
    if isinstance(y, Radical) and rx is not None:
        return Ordering(-y.compare_rational(rx))
    if isinstance(x, Radical) and isinstance(y, Radical):
        order = _compare_radicals(x, y)
        if order is not None:
            return order
    return _refine(x, y)


def sign(x: Exact) -> int:
    return int(compare(x, Fraction(0)))


def exact_min(*values: Exact) -> Exact:
    if not values:
        raise DomainError("exact_min of no values")
    best = values[0]
    for value in values[1:]:
        if compare(value, best) is Ordering.LESS:
            best = value
    return best


def exact_max(*values: Exact) -> Exact:
    if not values:
        raise DomainError("exact_max of no values")
    best = values[0]
    for value in values[1:]:
        if compare(value, best) is Ordering.GREATER:
            best = value
    return best


def floor_exact(x: Exact) -> int:
    """Certified floor of an exact value."""
    rational = _as_rational(x)
    if rational is not None:
        return math.floor(rational)
    candidate = math.floor(enclose(x, Fraction(1, 4)).lo)
    while compare(x, Fraction(candidate + 1)) is not Ordering.LESS:
        candidate += 1
    while compare(x, Fraction(candidate)) is Ordering.LESS:
        candidate -= 1
    return candidate


def ceil_exact(x: Exact) -> int:
    rational = _as_rational(x)
    if rational is not None:
        return math.ceil(rational)
    return -floor_exact(-x)


def to_decimal(x: Exact | RationalInterval, digits: int = 10) -> str:
    """Advisory decimal rendering with ``digits`` places after the point."""
    if digits < 0:
        raise DomainError("digits must be non-negative")
    box = enclose(x, Fraction(1, 10 ** (digits + 2)))
    mid = box.mid
    with localcontext() as context:
        context.prec = digits + len(str(abs(mid.numerator) // mid.denominator)) + 5
        value = Decimal(mid.numerator) / Decimal(mid.denominator)
        return str(value.quantize(Decimal(1).scaleb(-digits)))
