"""
Document schemas for files read and written by the command line.

Every exact number travels as a string in the ``exact`` text forms, so a
document can be re-parsed and re-checked without loss.
"""

from __future__ import annotations

import json
import logging
from pathlib import Path
from typing import Any, Literal, Optional, Union

import yaml
from pydantic import BaseModel, ConfigDict, Field, ValidationError

from seshadri.calculus import CurveRestriction, estimate_from_catalog, SeshadriEstimate
from seshadri.curves import CurveBundle
from seshadri.errors import CatalogError
from seshadri.exact import RationalField
from seshadri.products import FamilyTag, NefCertificate

logger = logging.getLogger(__name__)

SCHEMA_VERSION = 1

FAMILY_REFERENCES = {
    FamilyTag.FIBER.value: "fibres of the two projections",
    FamilyTag.CRITERION.value: "a, b, c >= 0 and a + b >= c(2g-2)",
    FamilyTag.VOJTA.value: "Vojta's inequality, any curve",
    FamilyTag.GENERAL_POINTS.value: "classes d f1 + (1 + g/(d-g)) f2 - d on a general curve",
    FamilyTag.KOUVIDAKIS.value: "Kouvidakis' symmetric class, very general curve",
    "necessary-conditions": "negative intersection with an effective class or itself",
}


class RestrictionRecord(BaseModel):
    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    curve: str
    mult: int = Field(default=1, ge=1)
    bundle: Union[str, CurveBundle]


class CatalogDocument(BaseModel):
    """Curve restrictions through one point, with bundles inline or by label."""

    model_config = ConfigDict(extra="forbid", arbitrary_types_allowed=True)

    bundles: dict[str, CurveBundle] = Field(default_factory=dict)
    restrictions: list[RestrictionRecord] = Field(default_factory=list)
    complete: bool = False
    lower: Optional[RationalField] = None

    def to_restrictions(self) -> list[CurveRestriction]:
        result = []
        for record in self.restrictions:
            bundle = record.bundle
            if isinstance(bundle, str):
                if bundle not in self.bundles:
                    raise CatalogError(f"restriction {record.curve!r} names unknown bundle {bundle!r}")
                bundle = self.bundles[bundle]
            result.append(CurveRestriction(curve_label=record.curve, mult_x=record.mult, restricted=bundle))
        return result

    def estimate(self, complete: Optional[bool] = None) -> SeshadriEstimate:
        return estimate_from_catalog(
            self.to_restrictions(),
            complete=self.complete if complete is None else complete,
            lower=self.lower,
        )


class CertificateDocument(BaseModel):
    """Versioned JSON output of a command, carrying certificates and exact payloads."""

    model_config = ConfigDict(arbitrary_types_allowed=True)

    schema_version: Literal[1] = SCHEMA_VERSION
    command: list[str] = Field(default_factory=list)
    certificates: list[NefCertificate] = Field(default_factory=list)
    payload: dict[str, Any] = Field(default_factory=dict)
    references: dict[str, str] = Field(default_factory=dict)

    @classmethod
    def for_certificates(
        cls,
        command: list[str],
        certificates: list[NefCertificate],
        payload: Optional[dict[str, Any]] = None,
    ) -> CertificateDocument:
        families = {
            part for certificate in certificates for part in certificate.family.split("+") if part
        }
        return cls(
            command=command,
            certificates=certificates,
            payload=payload or {},
            references={family: FAMILY_REFERENCES.get(family, "") for family in sorted(families)},
        )

    def to_json(self) -> str:
        return json.dumps(self.model_dump(mode="json"), indent=2, ensure_ascii=False)


def _read_structured(path: Path) -> Any:
    try:
        with open(path, encoding="utf-8") as f:
            if path.suffix == ".json":
                return json.load(f)
            return yaml.safe_load(f)
    except (OSError, yaml.YAMLError, json.JSONDecodeError) as exc:
        raise CatalogError(f"cannot read {path}: {exc}") from exc


def load_bundle_file(path: Path | str) -> CurveBundle:
    path = Path(path)
    try:
        return CurveBundle.model_validate(_read_structured(path))
    except ValidationError as exc:
        raise CatalogError(f"invalid bundle document {path}: {exc}") from exc


def load_catalog_file(path: Path | str) -> CatalogDocument:
    path = Path(path)
    try:
        return CatalogDocument.model_validate(_read_structured(path))
    except ValidationError as exc:
        raise CatalogError(f"invalid catalog document {path}: {exc}") from exc


def load_certificate_document(path: Path | str) -> CertificateDocument:
    path = Path(path)
    try:
        return CertificateDocument.model_validate(_read_structured(path))
    except ValidationError as exc:
        raise CatalogError(f"invalid certificate document {path}: {exc}") from exc
