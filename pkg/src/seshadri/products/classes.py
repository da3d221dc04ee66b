"""
Divisor classes on C x C in the span of f1, f2 and the diagonal.

Intersection numbers: ``f1^2 = f2^2 = 0``, ``f1.f2 = f1.d = f2.d = 1`` and
``d^2 = 2 - 2g``.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field

from seshadri.errors import DomainError, MixedRadicandError
from seshadri.exact import (
    DEFAULT_PRECISION,
    NumberField,
    QuadExt,
    QuadField,
    RationalInterval,
    enclose,
)

logger = logging.getLogger(__name__)


class Genus(BaseModel):
    model_config = ConfigDict(frozen=True)

    value: int = Field(ge=2)


def as_genus(g: int | Genus) -> int:
    if isinstance(g, Genus):
        return g.value
    if isinstance(g, bool) or not isinstance(g, int) or g < 2:
        raise DomainError(f"genus must be an integer >= 2, got {g!r}")
    return g


class CxCClass(BaseModel):
    """The class ``a*f1 + b*f2 + c*d``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: QuadField = QuadExt(0)
    b: QuadField = QuadExt(0)
    c: QuadField = QuadExt(0)

    @classmethod
    def of(cls, a: Any = 0, b: Any = 0, c: Any = 0) -> CxCClass:
        return cls(a=a, b=b, c=c)

    @property
    def coefficients(self) -> tuple[QuadExt, QuadExt, QuadExt]:
        return self.a, self.b, self.c

    @property
    def is_rational(self) -> bool:
        return all(x.is_rational for x in self.coefficients)

    def swapped(self) -> CxCClass:
        """Image under the involution exchanging the two factors."""
        return CxCClass(a=self.b, b=self.a, c=self.c)

    def __add__(self, other: object) -> CxCClass:
        if not isinstance(other, CxCClass):
            return NotImplemented
        return CxCClass(a=self.a + other.a, b=self.b + other.b, c=self.c + other.c)

    def __sub__(self, other: object) -> CxCClass:
        if not isinstance(other, CxCClass):
            return NotImplemented
        return self + (-other)

    def __neg__(self) -> CxCClass:
        return CxCClass(a=-self.a, b=-self.b, c=-self.c)

    def __mul__(self, scalar: object) -> CxCClass:
        if not isinstance(scalar, (QuadExt, Fraction, int)):
            return NotImplemented
        return CxCClass(a=self.a * scalar, b=self.b * scalar, c=self.c * scalar)

    __rmul__ = __mul__

    def __str__(self) -> str:
        terms: list[str] = []
        for value, symbol in zip(self.coefficients, ("f1", "f2", "d"), strict=True):
            if value == 0:
                continue
            negative = value.sign() < 0
            magnitude = -value if negative else value
            if magnitude == 1:
                body = symbol
            elif magnitude.is_rational:
                body = f"{magnitude} {symbol}"
            else:
                body = f"({magnitude}) {symbol}"
            if not terms:
                terms.append(f"-{body}" if negative else body)
            else:
                terms.append(f"{'-' if negative else '+'} {body}")
        return " ".join(terms) if terms else "0"


F1 = CxCClass.of(1, 0, 0)
F2 = CxCClass.of(0, 1, 0)
DIAGONAL = CxCClass.of(0, 0, 1)


def _pairing(first: tuple[Any, Any, Any], second: tuple[Any, Any, Any], g: int) -> Any:
    a1, b1, c1 = first
    a2, b2, c2 = second
    return a1 * b2 + a2 * b1 + (a1 * c2 + a2 * c1) + (b1 * c2 + b2 * c1) + c1 * c2 * (2 - 2 * g)


def intersect(
    first: CxCClass,
    second: CxCClass,
    g: int | Genus,
    precision: Fraction = DEFAULT_PRECISION,
) -> QuadExt | RationalInterval:
    """Intersection number, exact unless the coefficients span several radicands."""
    g = as_genus(g)
    try:
        return _pairing(first.coefficients, second.coefficients, g)
    except MixedRadicandError:
        # nine products of coefficients; each gets a ninth of the precision
        scale = 1 + max(abs(float(x)) for x in (*first.coefficients, *second.coefficients))
        width = Fraction(precision) / (12 * g * math.ceil(scale))
        logger.debug("intersect %s . %s falls back to enclosures", first, second)
        boxes_first = tuple(enclose(x, width) for x in first.coefficients)
        boxes_second = tuple(enclose(x, width) for x in second.coefficients)
        return _pairing(boxes_first, boxes_second, g)


def self_intersection(cls: CxCClass, g: int | Genus) -> QuadExt | RationalInterval:
    return intersect(cls, cls, g)


class PairingWitness(BaseModel):
    """A curve class (or the divisor itself) pairing negatively with a divisor."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["pairing"] = "pairing"
    pairing: str
    against: CxCClass
    value: NumberField


def _is_negative(value: QuadExt | RationalInterval) -> bool:
    if isinstance(value, RationalInterval):
        return value.certainly_negative()
    return value.sign() < 0


def necessary_conditions(cls: CxCClass, g: int | Genus) -> PairingWitness | None:
    """First violated nefness test among ``D.f1``, ``D.f2``, ``D.d`` and ``D^2``.

    Returns ``None`` when every test passes. Enclosures that straddle zero
    count as passing since they can't certify a violation.
    """
    g = as_genus(g)
    checks = (("D.f1", F1), ("D.f2", F2), ("D.d", DIAGONAL), ("D^2", cls))
    for label, curve in checks:
        value = intersect(cls, curve, g)
        if _is_negative(value):
            logger.debug("%s fails %s with %s", cls, label, value)
            return PairingWitness(pairing=label, against=curve, value=value)
    return None


def conjecture_class(g: int | Genus, a: Any) -> CxCClass:
    """``a*f1 + (1 + g/(a-1))*f2 - d``, which has self-intersection zero."""
    g = as_genus(g)
    a = QuadExt.coerce(a)
    if a <= 1:
        raise DomainError(f"conjecture class needs a > 1, got {a}")
    return CxCClass(a=a, b=1 + g / (a - 1), c=QuadExt(-1))


def symmetric_conjecture_class(g: int | Genus) -> CxCClass:
    g = as_genus(g)
    coefficient = QuadExt.sqrt(g) + 1
    return CxCClass(a=coefficient, b=coefficient, c=QuadExt(-1))


def theta_pullback(g: int | Genus) -> CxCClass:
    """Pullback of the theta divisor under the difference map."""
    g = as_genus(g)
    return CxCClass.of(g - 1, g - 1, 1)


def nef_corners(g: int | Genus) -> tuple[CxCClass, CxCClass]:
    """The two extremal ``c = 1`` rays of the ``a, b, c >= 0`` criterion cone."""
    g = as_genus(g)
    return CxCClass.of(2 * g - 2, 0, 1), CxCClass.of(0, 2 * g - 2, 1)


def difference_map_parameter(g: int | Genus, a: Any) -> QuadExt:
    """The ``t`` with ``-d - t * theta_pullback`` proportional to ``a(f1 + f2) - d``."""
    g = as_genus(g)
    a = QuadExt.coerce(a)
    denominator = g - 1 + a
    if denominator == 0:
        raise DomainError(f"a = {a} makes g - 1 + a vanish")
    return -a / denominator
