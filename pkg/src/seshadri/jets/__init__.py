"""Jet separation and global generation thresholds from Seshadri constants."""

from seshadri.jets.thresholds import (
    AT_THE_POINT,
    GENERAL_POINTS,
    VERY_GENERAL_POINTS,
    JetQuery,
    ThresholdResult,
    adjoint_global_generation,
    adjoint_jet_threshold,
    adjoint_min_p,
    adjoint_result,
    hacon_lambda,
    hacon_M,
    hacon_M_terms,
    hacon_result,
    line_bundle_ell,
    line_bundle_result,
    popa_schnell_result,
    ps_lambda,
    ps_min_m,
    ps_seshadri_threshold,
)

__all__ = [
    "AT_THE_POINT",
    "GENERAL_POINTS",
    "VERY_GENERAL_POINTS",
    "JetQuery",
    "ThresholdResult",
    "adjoint_global_generation",
    "adjoint_jet_threshold",
    "adjoint_min_p",
    "adjoint_result",
    "hacon_M",
    "hacon_M_terms",
    "hacon_lambda",
    "hacon_result",
    "line_bundle_ell",
    "line_bundle_result",
    "popa_schnell_result",
    "ps_lambda",
    "ps_min_m",
    "ps_seshadri_threshold",
]
