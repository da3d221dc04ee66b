"""
Jet separation and global generation thresholds.

Every calculator works in both directions: the Seshadri threshold implied
by the data, and the least integer parameter certified by a given Seshadri
lower bound. Strict inequalities always resolve to the least integer
strictly above an exactly decided bound.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator

from seshadri.errors import DomainError
from seshadri.exact import (
    ExactField,
    ExactValue,
    NumberField,
    Ordering,
    QuadExt,
    Radical,
    RationalField,
    binomial,
    compare,
    exact_min,
    floor_exact,
    sign,
)

logger = logging.getLogger(__name__)

VERY_GENERAL_POINTS = "very general points"
GENERAL_POINTS = "general points"
AT_THE_POINT = "the point where the Seshadri bound holds"


class JetQuery(BaseModel):
    """Parameters shared by the threshold calculators."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    n: int = Field(default=1, ge=1)
    r: int = Field(default=1, ge=1)
    k: int = Field(default=1, ge=1)
    m: int = Field(default=0, ge=0)
    s: int = Field(default=0, ge=-1)
    p: int = Field(default=0, ge=0)
    beta: Optional[RationalField] = None
    eps: Optional[ExactField] = None

    @field_validator("beta")
    @classmethod
    def _beta_positive(cls, value: Optional[Fraction]) -> Optional[Fraction]:
        if value is not None and value <= 0:
            raise ValueError(f"beta must be positive, got {value}")
        return value


class ThresholdResult(BaseModel):
    """One calculator answer: a threshold, a certified integer (or impossible) and its locus."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    name: str
    inputs: dict[str, str]
    threshold: Optional[NumberField] = None
    certified: Optional[int] = None
    impossible: bool = False
    qualifier: str = ""


def _divide(numerator: Fraction | int, value: ExactValue) -> ExactValue:
    """``numerator / value`` exactly; radicals must have no rational offset."""
    numerator = Fraction(numerator)
    if numerator == 0:
        return Fraction(0)
    if isinstance(value, Radical):
        return numerator / value
    result = QuadExt.coerce(numerator) / QuadExt.coerce(value)
    return result.p if result.is_rational else result


def _require_positive(value: ExactValue, label: str) -> None:
    if sign(value) <= 0:
        raise DomainError(f"{label} must be positive, got {value}")


def hacon_M_terms(n: int, r: int) -> list[ExactValue]:
    """The terms ``binom(n+r-i, r) ** (-1/(n-i)) / (n-i)`` for ``i = 0..n-1``."""
    if n < 1 or r < 1:
        raise DomainError(f"hacon_M needs n, r >= 1, got n={n}, r={r}")
    return [
        Radical.build(Fraction(1, binomial(n + r - i, r)), n - i, scale=Fraction(1, n - i))
        for i in range(n)
    ]


def hacon_M(n: int, r: int) -> ExactValue:
    return exact_min(*hacon_M_terms(n, r))


def hacon_lambda(n: int, beta: Fraction | int, M: ExactValue) -> int:
    """Least integer strictly above ``n*beta/M``."""
    _require_positive(M, "M")
    return floor_exact(_divide(n * Fraction(beta), M)) + 1


def ps_lambda(k: int, beta: Fraction | int, M: ExactValue, n: int, s: int, r: int) -> int:
    """Least ``lambda >= 0`` strictly above ``k*(beta*(n+s)/M - (r-1)) - 1``."""
    _require_positive(M, "M")
    bound = k * _divide(Fraction(beta) * (n + s), M) - k * (r - 1) - 1
    return max(0, floor_exact(bound) + 1)


def adjoint_jet_threshold(n: int, r: int, p: int, s: int) -> Fraction:
    """A Seshadri constant above ``(n+s)/(p+r)`` gives s-jets of ``K + Sym^p V + det V``."""
    if p + r <= 0:
        raise DomainError("p + r must be positive")
    return Fraction(n + s, p + r)


def _least_above(bound: ExactValue) -> int:
    """Least integer ``>= 0`` strictly above ``bound``."""
    return max(0, floor_exact(bound) + 1)


def adjoint_min_p(n: int, r: int, s: int, eps: Any) -> Optional[int]:
    """Least ``p >= 0`` with ``(n+s)/(p+r) < eps``; ``None`` when no ``p`` works."""
    if sign(eps) <= 0:
        return None
    if n + s <= 0:
        return 0
    # (n+s)/(p+r) < eps  <=>  p > (n+s)/eps - r
    return _least_above(_divide(n + s, eps) - r)


def adjoint_global_generation(n: int, r: int, eps: Any) -> bool:
    """``eps > n/r`` makes the adjoint determinant bundle globally generated."""
    return compare(eps, adjoint_jet_threshold(n, r, 0, 0)) is Ordering.GREATER


def ps_seshadri_threshold(k: int, n: int, s: int, m: int, r: int) -> Fraction:
    return Fraction(k * (n + s), m + k * (r - 1) + 1)


def ps_min_m(k: int, n: int, s: int, r: int, eps: Any) -> Optional[int]:
    """Least ``m >= 0`` with ``ps_seshadri_threshold(k, n, s, m, r) < eps``."""
    if sign(eps) <= 0:
        return None
    if n + s <= 0:
        return 0
    # k(n+s)/(m + k(r-1) + 1) < eps  <=>  m > k(n+s)/eps - k(r-1) - 1
    return _least_above(_divide(k * (n + s), eps) - (k * (r - 1) + 1))


def line_bundle_ell(k: int, n: int, s: int, low_dim_ample: bool = False) -> int:
    """Least ``l`` in the line-bundle jet statement, sharper for ample bundles in dimension <= 3."""
    if low_dim_ample and n > 3:
        raise DomainError(f"the low-dimensional bound needs n <= 3, got n={n}")
    factor = n - 1 if low_dim_ample else n
    return max(0, k * (factor * (n + s) + 1))


def _render(**values: Any) -> dict[str, str]:
    return {key: str(value) for key, value in values.items() if value is not None}


def hacon_result(query: JetQuery) -> ThresholdResult:
    if query.beta is None:
        raise DomainError("hacon needs beta")
    M = hacon_M(query.n, query.r)
    return ThresholdResult(
        name="hacon",
        inputs=_render(n=query.n, r=query.r, beta=query.beta),
        threshold=M,
        certified=hacon_lambda(query.n, query.beta, M),
        qualifier=VERY_GENERAL_POINTS,
    )


def adjoint_result(query: JetQuery) -> ThresholdResult:
    threshold = adjoint_jet_threshold(query.n, query.r, query.p, query.s)
    certified = None
    impossible = False
    if query.eps is not None:
        certified = adjoint_min_p(query.n, query.r, query.s, query.eps)
        impossible = certified is None
    return ThresholdResult(
        name="adjoint",
        inputs=_render(n=query.n, r=query.r, p=query.p, s=query.s, eps=query.eps),
        threshold=threshold,
        certified=certified,
        impossible=impossible,
        qualifier=AT_THE_POINT,
    )


def popa_schnell_result(query: JetQuery) -> ThresholdResult:
    threshold = ps_seshadri_threshold(query.k, query.n, query.s, query.m, query.r)
    certified = None
    impossible = False
    if query.eps is not None:
        certified = ps_min_m(query.k, query.n, query.s, query.r, query.eps)
        impossible = certified is None
    return ThresholdResult(
        name="popa-schnell",
        inputs=_render(k=query.k, n=query.n, s=query.s, m=query.m, r=query.r, eps=query.eps),
        threshold=threshold,
        certified=certified,
        impossible=impossible,
        qualifier=GENERAL_POINTS,
    )


def line_bundle_result(query: JetQuery, low_dim_ample: bool = False) -> ThresholdResult:
    return ThresholdResult(
        name="line-bundle",
        inputs=_render(k=query.k, n=query.n, s=query.s, low_dim_ample=low_dim_ample),
        certified=line_bundle_ell(query.k, query.n, query.s, low_dim_ample),
        qualifier=GENERAL_POINTS,
    )
