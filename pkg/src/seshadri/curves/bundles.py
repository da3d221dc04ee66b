"""
Vector bundles on a smooth curve, modelled by their semistable pieces.

A ``CurveBundle`` is a list of semistable pieces plus an optional rational
twist (a Q-twisted bundle). Everything here depends only on ranks and
degrees, which is all a Harder-Narasimhan polygon sees.
"""

from __future__ import annotations

import itertools
import logging
from fractions import Fraction
from typing import Iterable

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from seshadri.errors import DomainError
from seshadri.exact import RationalField, binomial

logger = logging.getLogger(__name__)

EXACT_MODEL = ConfigDict(frozen=True, arbitrary_types_allowed=True)


class SemistablePiece(BaseModel):
    model_config = EXACT_MODEL

    rank: int = Field(ge=1)
    degree: RationalField

    @property
    def slope(self) -> Fraction:
        return self.degree / self.rank


class HNPolygon(BaseModel):
    """Vertices ``(rank, degree)`` of a concave Harder-Narasimhan polygon from (0, 0)."""

    model_config = EXACT_MODEL

    vertices: tuple[tuple[int, RationalField], ...]

    @model_validator(mode="after")
    def _check_shape(self) -> HNPolygon:
        if not self.vertices or self.vertices[0] != (0, 0):
            raise ValueError("polygon must start at (0, 0)")
        slopes = self.slopes
        if any(later >= earlier for earlier, later in itertools.pairwise(slopes)):
            raise ValueError("polygon slopes must be strictly decreasing")
        return self

    @property
    def slopes(self) -> list[Fraction]:
        return [
            (d1 - d0) / (r1 - r0)
            for (r0, d0), (r1, d1) in itertools.pairwise(self.vertices)
        ]

    @property
    def mu_max(self) -> Fraction:
        return self.slopes[0]

    @property
    def mu_min(self) -> Fraction:
        return self.slopes[-1]


class CurveBundle(BaseModel):
    """A (possibly Q-twisted) bundle given by semistable summands of its graded pieces."""

    model_config = EXACT_MODEL

    pieces: tuple[SemistablePiece, ...] = Field(min_length=1)
    twist: RationalField = Fraction(0)
    label: str | None = None

    @field_validator("pieces", mode="before")
    @classmethod
    def _coerce_pieces(cls, value: object) -> object:
        if isinstance(value, list):
            return tuple(
                SemistablePiece(rank=item[0], degree=item[1])
                if isinstance(item, tuple)
                else item
                for item in value
            )
        return value

    @classmethod
    def of(cls, *pieces: tuple[int, int | Fraction | str], twist: int | Fraction | str = 0) -> CurveBundle:
        return cls(pieces=[SemistablePiece(rank=r, degree=d) for r, d in pieces], twist=twist)

    @property
    def rank(self) -> int:
        return sum(piece.rank for piece in self.pieces)

    @property
    def degree(self) -> Fraction:
        """Degree including the twist contribution."""
        return sum((piece.degree for piece in self.pieces), Fraction(0)) + self.rank * self.twist

    @property
    def slope(self) -> Fraction:
        return self.degree / self.rank

    def folded(self) -> CurveBundle:
        """The same Q-bundle with the twist moved into the piece degrees."""
        if self.twist == 0:
            return self
        return CurveBundle(
            pieces=[
                SemistablePiece(rank=p.rank, degree=p.degree + p.rank * self.twist)
                for p in self.pieces
            ],
            label=self.label,
        )

    def merged(self) -> list[SemistablePiece]:
        """Twisted pieces grouped by slope, steepest first."""
        totals: dict[Fraction, tuple[int, Fraction]] = {}
        for piece in self.folded().pieces:
            rank, degree = totals.get(piece.slope, (0, Fraction(0)))
            totals[piece.slope] = (rank + piece.rank, degree + piece.degree)
        return [
            SemistablePiece(rank=rank, degree=degree)
            for _, (rank, degree) in sorted(totals.items(), key=lambda item: item[0], reverse=True)
        ]

    def __str__(self) -> str:
        body = ",".join(f"{p.rank}:{p.degree}" for p in self.pieces)
        return body if self.twist == 0 else f"{body} twist={self.twist}"


def hn_polygon(bundle: CurveBundle) -> HNPolygon:
    vertices: list[tuple[int, Fraction]] = [(0, Fraction(0))]
    for piece in bundle.merged():
        rank, degree = vertices[-1]
        vertices.append((rank + piece.rank, degree + piece.degree))
    return HNPolygon(vertices=tuple(vertices))


def mu_min(bundle: CurveBundle) -> Fraction:
    return min(piece.slope for piece in bundle.pieces) + bundle.twist


def mu_max(bundle: CurveBundle) -> Fraction:
    return max(piece.slope for piece in bundle.pieces) + bundle.twist


mu_bar_min = mu_min


def mu(bundle: CurveBundle) -> Fraction:
    return bundle.slope


def hn_filtration(bundle: CurveBundle) -> list[SemistablePiece]:
    """Graded pieces of the HN filtration, twist folded in, in decreasing slope order."""
    return bundle.merged()


def seshadri_on_curve(bundle: CurveBundle, mult_x: int) -> Fraction:
    """Seshadri constant at a point of multiplicity ``mult_x`` on the curve."""
    if mult_x < 1:
        raise DomainError(f"multiplicity must be >= 1, got {mult_x}")
    return mu_min(bundle) / mult_x


def tensor(first: CurveBundle, second: CurveBundle) -> CurveBundle:
    pieces = [
        SemistablePiece(rank=a.rank * b.rank, degree=a.rank * b.degree + b.rank * a.degree)
        for a, b in itertools.product(first.pieces, second.pieces)
    ]
    return CurveBundle(pieces=pieces, twist=first.twist + second.twist)


def tensor_power(bundle: CurveBundle, m: int) -> CurveBundle:
    if m < 1:
        raise DomainError(f"tensor power must be >= 1, got {m}")
    result = bundle
    for _ in range(m - 1):
        result = CurveBundle(pieces=tensor(result, bundle).merged())
    return result


def _compositions(total: int, parts: int) -> Iterable[tuple[int, ...]]:
    for bars in itertools.combinations(range(total + parts - 1), parts - 1):
        edges = (-1, *bars, total + parts - 1)
        yield tuple(edges[i + 1] - edges[i] - 1 for i in range(parts))


def sym(bundle: CurveBundle, m: int) -> CurveBundle:
    """Symmetric power; ``Sym^k`` of a semistable piece is semistable of slope ``k*mu``."""
    if m < 0:
        raise DomainError(f"symmetric power must be >= 0, got {m}")
    if m == 0:
        return CurveBundle.of((1, 0))
    base = CurveBundle(pieces=CurveBundle(pieces=bundle.pieces).merged())
    pieces: list[SemistablePiece] = []
    for split in _compositions(m, len(base.pieces)):
        rank = 1
        slope = Fraction(0)
        for piece, k in zip(base.pieces, split, strict=True):
            rank *= binomial(piece.rank + k - 1, piece.rank - 1)
            slope += k * piece.slope
        pieces.append(SemistablePiece(rank=rank, degree=rank * slope))
    return CurveBundle(pieces=pieces, twist=m * bundle.twist)


def direct_sum(first: CurveBundle, second: CurveBundle) -> CurveBundle:
    if first.twist == second.twist:
        return CurveBundle(pieces=first.pieces + second.pieces, twist=first.twist)
    return CurveBundle(pieces=first.folded().pieces + second.folded().pieces)


def dual(bundle: CurveBundle) -> CurveBundle:
    return CurveBundle(
        pieces=[SemistablePiece(rank=p.rank, degree=-p.degree) for p in bundle.pieces],
        twist=-bundle.twist,
    )


def det(bundle: CurveBundle) -> CurveBundle:
    return CurveBundle.of((1, bundle.degree))


def twist(bundle: CurveBundle, amount: Fraction | int) -> CurveBundle:
    return CurveBundle(pieces=bundle.pieces, twist=bundle.twist + Fraction(amount), label=bundle.label)


def is_nef(bundle: CurveBundle) -> bool:
    return mu_min(bundle) >= 0


def is_ample(bundle: CurveBundle) -> bool:
    return mu_min(bundle) > 0


def quotient_bound(bundle: CurveBundle, quotient: CurveBundle) -> bool:
    """Whether ``quotient`` is slope-compatible with being a quotient of ``bundle``.

    Quotients can only raise the minimal slope, so ``False`` rules the pair out.
    """
    return mu_min(quotient) >= mu_min(bundle)
