"""Upper and lower bound combinators for Seshadri constants."""

from __future__ import annotations

import logging
from enum import Enum
from fractions import Fraction
from typing import Any

from pydantic import BaseModel, ConfigDict, Field

from seshadri.errors import DomainError
from seshadri.exact import DEFAULT_PRECISION, RationalField, RationalInterval, QuadExt, binomial, nth_root

logger = logging.getLogger(__name__)


def segre_upper_bound(
    s_n_dual: Fraction | int,
    n: int,
    r: int,
    mult_x: int,
    precision: Fraction = DEFAULT_PRECISION,
) -> Fraction | QuadExt | RationalInterval:
    """``(s_n(V^dual) / (binom(n+r-1, n) * mult_x)) ** (1/n)``."""
    if s_n_dual < 0:
        raise DomainError(f"Segre number must be >= 0, got {s_n_dual}")
    if n < 1 or r < 1 or mult_x < 1:
        raise DomainError("n, r and mult_x must be positive")
    return nth_root(Fraction(s_n_dual) / (binomial(n + r - 1, n) * mult_x), n, precision)


def segre_subvariety_bound(
    segre_number: Fraction | int,
    n: int,
    i: int,
    r: int,
    mult_z: int,
    precision: Fraction = DEFAULT_PRECISION,
) -> Fraction | QuadExt | RationalInterval:
    """Bound from a codimension-``i`` subvariety ``Z`` through the point.

    ``segre_number`` is the degree of ``s_{n-i}(V^dual)`` on ``Z`` and
    ``mult_z`` the multiplicity of ``Z`` at the point.
    """
    if not 0 <= i < n:
        raise DomainError(f"codimension must satisfy 0 <= i < n, got i={i}, n={n}")
    return segre_upper_bound(segre_number, n - i, r, mult_z, precision)


def line_bundle_volume_bound(
    volume: Fraction | int,
    n: int,
    mult: int = 1,
    precision: Fraction = DEFAULT_PRECISION,
) -> Fraction | QuadExt | RationalInterval:
    """Rank-one case: ``(L^n / mult) ** (1/n)``."""
    return segre_upper_bound(volume, n, 1, mult, precision)


def det_upper_bound(eps_det: Fraction | int, r: int) -> Fraction:
    if r < 1:
        raise DomainError(f"rank must be >= 1, got {r}")
    return Fraction(eps_det) / r


class BoundKind(str, Enum):
    FACTOR = "factor"
    SYM = "sym"
    TWIST = "twist"


class BoundPart(BaseModel):
    """One lower-bound contribution.

    ``factor`` parts add their value, ``sym`` parts add ``power * value``
    and ``twist`` parts add ``coefficient * value`` (``value`` being the
    constant of the twisting class).
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    label: str
    value: RationalField
    kind: BoundKind = BoundKind.FACTOR
    power: int = Field(default=1, ge=0)
    coefficient: RationalField = Fraction(1)

    @property
    def contribution(self) -> Fraction:
        if self.kind is BoundKind.SYM:
            return self.power * self.value
        if self.kind is BoundKind.TWIST:
            if self.coefficient < 0:
                raise DomainError("twist coefficients must be >= 0 for a lower bound")
            return self.coefficient * self.value
        return self.value


def combine_lower_bounds(parts: list[BoundPart | tuple[str, Any]]) -> Fraction:
    """Lower bound for a tensor product from lower bounds of its factors."""
    total = Fraction(0)
    for part in parts:
        if isinstance(part, tuple):
            part = BoundPart(label=part[0], value=part[1])
        total += part.contribution
        logger.debug("bound part %s contributes %s", part.label, part.contribution)
    return total


def sym_lower_bound(eps: Fraction | int, d: int) -> Fraction:
    return combine_lower_bounds([BoundPart(label="sym", value=eps, kind=BoundKind.SYM, power=d)])


def twist_lower_bound(eps: Fraction | int, eps_h: Fraction | int, t: Fraction | int) -> Fraction:
    """``eps(V<t h>) >= eps(V) + t * eps(h)`` for ``t >= 0``."""
    if t < 0:
        raise DomainError(f"twist lower bound needs t >= 0, got {t}")
    return combine_lower_bounds(
        [
            BoundPart(label="V", value=eps),
            BoundPart(label="h", value=eps_h, kind=BoundKind.TWIST, coefficient=t),
        ]
    )


def concave_combination_bound(
    eps_first: Fraction | int, eps_second: Fraction | int, t: Fraction | int
) -> Fraction:
    """Concavity of the Seshadri function along ``(1-t)xi + t xi'``."""
    t = Fraction(t)
    if not 0 <= t <= 1:
        raise DomainError(f"t must lie in [0, 1], got {t}")
    return (1 - t) * Fraction(eps_first) + t * Fraction(eps_second)
