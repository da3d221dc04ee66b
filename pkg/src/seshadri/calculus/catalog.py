"""Known Seshadri constants of tangent and cotangent bundles."""

from __future__ import annotations

from enum import Enum
from fractions import Fraction

from pydantic import BaseModel, ConfigDict, model_validator

from seshadri.calculus.estimates import ExtendedValue, SeshadriEstimate
from seshadri.errors import DomainError


class VarietyKind(str, Enum):
    PROJECTIVE_SPACE = "projective-space"
    HOMOGENEOUS_NON_PN = "homogeneous"
    GENERAL_TYPE_OR_PSEF_CANONICAL = "psef-canonical"
    CALABI_YAU_LIKE = "calabi-yau"
    FIBRED = "fibred"


class KnownVariety(BaseModel):
    model_config = ConfigDict(frozen=True)

    kind: VarietyKind
    n: int | None = None

    @model_validator(mode="after")
    def _check_dimension(self) -> KnownVariety:
        if self.kind is VarietyKind.PROJECTIVE_SPACE and (self.n is None or self.n < 1):
            raise ValueError("projective space needs a dimension n >= 1")
        return self


class Relation(str, Enum):
    EQUALS = "="
    AT_MOST = "<="
    LESS_THAN = "<"


class CatalogEntry(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    bundle: str
    relation: Relation
    value: ExtendedValue
    locus: str = "every point"

    def as_estimate(self) -> SeshadriEstimate:
        return SeshadriEstimate(upper=self.value, catalog_complete=self.relation is Relation.EQUALS)

    def __str__(self) -> str:
        return f"eps({self.bundle}; x) {self.relation.value} {self.value} at {self.locus}"


def known_value(variety: KnownVariety) -> CatalogEntry:
    kind = variety.kind
    if kind is VarietyKind.PROJECTIVE_SPACE:
        value = 2 if variety.n == 1 else 1
        return CatalogEntry(bundle="TX", relation=Relation.EQUALS, value=ExtendedValue.of(value))
    if kind is VarietyKind.HOMOGENEOUS_NON_PN:
        return CatalogEntry(bundle="TX", relation=Relation.EQUALS, value=ExtendedValue.of(0))
    if kind is VarietyKind.GENERAL_TYPE_OR_PSEF_CANONICAL:
        return CatalogEntry(
            bundle="TX",
            relation=Relation.EQUALS,
            value=ExtendedValue.minus_infinity(),
            locus="a very general point",
        )
    # Calabi-Yau type and positive-dimensional smooth fibrations share the same bound
    return CatalogEntry(bundle="TX", relation=Relation.AT_MOST, value=ExtendedValue.of(0))


def cotangent_rational_curve_bound(mult: int) -> CatalogEntry:
    """A rational curve through the point with multiplicity ``mult`` there."""
    if mult < 1:
        raise DomainError(f"multiplicity must be >= 1, got {mult}")
    return CatalogEntry(
        bundle="OmegaX", relation=Relation.AT_MOST, value=ExtendedValue.of(Fraction(-2, mult))
    )


def cotangent_non_psef_canonical(very_general: bool = False) -> CatalogEntry:
    """Canonical class not pseudo-effective (X uniruled)."""
    if very_general:
        return CatalogEntry(
            bundle="OmegaX",
            relation=Relation.EQUALS,
            value=ExtendedValue.minus_infinity(),
            locus="a very general point",
        )
    return CatalogEntry(bundle="OmegaX", relation=Relation.LESS_THAN, value=ExtendedValue.of(0))
