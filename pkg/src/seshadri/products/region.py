"""Grids of nef verdicts over the ``(a, b)`` plane of classes ``a*f1 + b*f2 - d``."""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Iterator

import numpy as np
from pydantic import BaseModel, ConfigDict

from seshadri.errors import DomainError
from seshadri.exact import RationalField
from seshadri.products.certificates import Generality, Verdict
from seshadri.products.certify import certify_nef
from seshadri.products.classes import CxCClass, Genus, as_genus

logger = logging.getLogger(__name__)

# matrix codes: -1 NotNef, 0 Unknown, 1/2/3 Nef at Arbitrary/General/VeryGeneral
_NOT_NEF_CODE = -1
_UNKNOWN_CODE = 0


class RegionCell(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    a: RationalField
    b: RationalField
    verdict: Verdict
    generality: Generality | None = None

    @property
    def code(self) -> int:
        if self.verdict is Verdict.NOT_NEF:
            return _NOT_NEF_CODE
        if self.verdict is Verdict.UNKNOWN or self.generality is None:
            return _UNKNOWN_CODE
        return self.generality.level + 1


class RegionGrid(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    genus: int
    max_generality: Generality
    a_values: tuple[RationalField, ...]
    b_values: tuple[RationalField, ...]
    cells: tuple[RegionCell, ...]

    def cell(self, a: Any, b: Any) -> RegionCell:
        a, b = Fraction(a), Fraction(b)
        for cell in self.cells:
            if cell.a == a and cell.b == b:
                return cell
        raise KeyError(f"({a}, {b}) is not a grid point")

    def as_array(self) -> np.ndarray:
        """Verdict codes with rows indexed by ``b`` and columns by ``a``."""
        codes = np.zeros((len(self.b_values), len(self.a_values)), dtype=np.int8)
        column = {a: j for j, a in enumerate(self.a_values)}
        row = {b: i for i, b in enumerate(self.b_values)}
        for cell in self.cells:
            codes[row[cell.b], column[cell.a]] = cell.code
        return codes

    def rows(self) -> Iterator[dict[str, Any]]:
        for cell in self.cells:
            yield cell.model_dump(mode="json")


def _axis(bounds: tuple[Any, Any], step: Fraction) -> list[Fraction]:
    low, high = Fraction(bounds[0]), Fraction(bounds[1])
    count = int((high - low) / step) + 1 if high >= low else 0
    return [low + i * step for i in range(count)]


def region_sample(
    g: int | Genus,
    a_range: tuple[Any, Any],
    b_range: tuple[Any, Any],
    step: Any,
    max_generality: Generality = Generality.VERY_GENERAL,
) -> RegionGrid:
    """Certify every grid point ``a*f1 + b*f2 - d`` of the given ranges (bounds inclusive)."""
    g = as_genus(g)
    step = Fraction(step)
    if step <= 0:
        raise DomainError(f"step must be positive, got {step}")
    a_values, b_values = _axis(a_range, step), _axis(b_range, step)
    cells = []
    for b in b_values:
        for a in a_values:
            certificate = certify_nef(CxCClass.of(a, b, -1), g, max_generality)
            cells.append(
                RegionCell(a=a, b=b, verdict=certificate.verdict, generality=certificate.generality)
            )
    logger.info("sampled %d cells for g=%d", len(cells), g)
    return RegionGrid(
        genus=g,
        max_generality=max_generality,
        a_values=tuple(a_values),
        b_values=tuple(b_values),
        cells=tuple(cells),
    )
