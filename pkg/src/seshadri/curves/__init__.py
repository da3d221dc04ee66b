"""
Bundles on curves.

Harder-Narasimhan data, minimal slopes, the Seshadri constant at a point
of a curve and the standard constructions (tensor, symmetric powers, sums,
dual, determinant, Q-twists).
"""

from seshadri.curves.bundles import (
    CurveBundle,
    HNPolygon,
    SemistablePiece,
    det,
    direct_sum,
    dual,
    hn_filtration,
    hn_polygon,
    is_ample,
    is_nef,
    mu,
    mu_bar_min,
    mu_max,
    mu_min,
    quotient_bound,
    seshadri_on_curve,
    sym,
    tensor,
    tensor_power,
    twist,
)

__all__ = [
    "CurveBundle",
    "HNPolygon",
    "SemistablePiece",
    "det",
    "direct_sum",
    "dual",
    "hn_filtration",
    "hn_polygon",
    "is_ample",
    "is_nef",
    "mu",
    "mu_bar_min",
    "mu_max",
    "mu_min",
    "quotient_bound",
    "seshadri_on_curve",
    "sym",
    "tensor",
    "tensor_power",
    "twist",
]
