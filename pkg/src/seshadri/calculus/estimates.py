"""
Seshadri constants of a bundle at a point, estimated from curve catalogs.

The constant is an infimum over every curve through the point, which can't
be enumerated. A catalog of restrictions therefore gives only an upper bound
unless the caller asserts it is complete. Lower bounds come from the
combinators in :mod:`seshadri.calculus.bounds`.
"""

from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from typing import Any, Literal

from pydantic import BaseModel, ConfigDict, Field, model_validator

from seshadri.curves import CurveBundle, seshadri_on_curve
from seshadri.errors import DomainError
from seshadri.exact import ExactField, Ordering, compare, format_number

logger = logging.getLogger(__name__)


class ExtendedValue(BaseModel):
    """A signed extended real: an exact finite value or one of +inf / -inf."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    finite: ExactField | None = None
    infinity: Literal[-1, 0, 1] = 0

    @model_validator(mode="after")
    def _check(self) -> ExtendedValue:
        if (self.finite is None) == (self.infinity == 0):
            raise ValueError("exactly one of a finite value or an infinity is required")
        return self

    @classmethod
    def of(cls, value: Any) -> ExtendedValue:
        return cls(finite=value)

    @classmethod
    def plus_infinity(cls) -> ExtendedValue:
        return cls(infinity=1)

    @classmethod
    def minus_infinity(cls) -> ExtendedValue:
        return cls(infinity=-1)

    @property
    def is_finite(self) -> bool:
        return self.infinity == 0

    def compare(self, other: ExtendedValue | Any) -> Ordering:
        if not isinstance(other, ExtendedValue):
            other = ExtendedValue.of(other)
        if self.infinity or other.infinity:
            return Ordering.of(self.infinity - other.infinity)
        return compare(self.finite, other.finite)

    def __lt__(self, other: object) -> bool:
        return self.compare(other) is Ordering.LESS

    def __le__(self, other: object) -> bool:
        return self.compare(other) is not Ordering.GREATER

    def __str__(self) -> str:
        if self.infinity:
            return "inf" if self.infinity > 0 else "-inf"
        return format_number(self.finite)


class CurveRestriction(BaseModel):
    """The pullback of a bundle to (the normalization of) one curve through the point."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    curve_label: str
    mult_x: int = Field(ge=1)
    restricted: CurveBundle

    @property
    def value(self) -> Fraction:
        return seshadri_on_curve(self.restricted, self.mult_x)


class SeshadriEstimate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    upper: ExtendedValue
    catalog_complete: bool = False
    lower: ExtendedValue | None = None
    witness_curve: str | None = None

    @property
    def exact(self) -> ExtendedValue | None:
        """The Seshadri constant itself, known only for complete catalogs."""
        return self.upper if self.catalog_complete else None

    @property
    def certified_lower(self) -> ExtendedValue | None:
        if self.catalog_complete:
            return self.upper
        return self.lower


class AmplenessVerdict(str, Enum):
    AMPLE = "Ample"
    NOT_AMPLE = "NotAmple"
    UNKNOWN = "Unknown"


def estimate_from_catalog(
    restrictions: list[CurveRestriction],
    complete: bool = False,
    lower: Any = None,
) -> SeshadriEstimate:
    """Minimum of the curve-wise Seshadri constants over the supplied curves.

    With no curves the constant is +inf by convention.
    """
    lower_value = None if lower is None else ExtendedValue.of(lower)
    if not restrictions:
        logger.debug("empty curve catalog, reporting +inf")
        return SeshadriEstimate(
            upper=ExtendedValue.plus_infinity(), catalog_complete=complete, lower=lower_value
        )
    best = min(restrictions, key=lambda restriction: restriction.value)
    upper = ExtendedValue.of(best.value)
    if lower_value is not None and upper < lower_value:
        raise DomainError(f"lower bound {lower_value} exceeds catalog minimum {upper}")
    logger.debug("catalog minimum %s attained on %s", upper, best.curve_label)
    return SeshadriEstimate(
        upper=upper,
        catalog_complete=complete,
        lower=lower_value,
        witness_curve=best.curve_label,
    )


def toric_seshadri(invariant_line_splittings: list[list[int]]) -> int:
    """Smallest summand degree over the splittings on invariant lines through a fixed point."""
    if not invariant_line_splittings or not all(invariant_line_splittings):
        raise DomainError("toric_seshadri needs at least one line with at least one summand")
    return min(min(degrees) for degrees in invariant_line_splittings)


def ampleness_verdict(point_estimates: list[SeshadriEstimate]) -> AmplenessVerdict:
    """Tri-state ampleness from estimates at a covering family of points.

    Any upper bound <= 0 rules out ampleness. A positive certified lower
    bound at every point proves it.
    """
    if any(estimate.upper <= 0 for estimate in point_estimates):
        return AmplenessVerdict.NOT_AMPLE
    lowers = [estimate.certified_lower for estimate in point_estimates]
    if point_estimates and all(value is not None and value.compare(0) is Ordering.GREATER for value in lowers):
        return AmplenessVerdict.AMPLE
    return AmplenessVerdict.UNKNOWN
