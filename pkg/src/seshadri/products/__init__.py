"""
Nef classes on the self-product of a curve.

1. **Classes** - ``CxCClass`` in the span of ``f1``, ``f2``, ``d`` with its
   exact intersection form and the necessary nefness tests.
2. **Families** - Vojta arcs, the general-point family, Kouvidakis' class
   and the ``c >= 0`` criterion, each tagged with its generality hypothesis.
3. **Certification** - exact convex-hull membership with re-checkable
   certificates (``certify_nef`` / ``verify_certificate``).
4. **Tangency** - tangents from a point to the Vojta curve.
5. **Slopes and regions** - the direct-image slope formula and verdict grids.
"""

from seshadri.products.certificates import (
    CombinationTerm,
    CombinationWitness,
    FamilyTag,
    Generality,
    Generator,
    NefCertificate,
    Verdict,
)
from seshadri.products.certify import NefConeModel, certify_nef, cone_model, verify_certificate
from seshadri.products.classes import (
    DIAGONAL,
    F1,
    F2,
    CxCClass,
    Genus,
    PairingWitness,
    as_genus,
    conjecture_class,
    difference_map_parameter,
    intersect,
    necessary_conditions,
    nef_corners,
    self_intersection,
    symmetric_conjecture_class,
    theta_pullback,
)
from seshadri.products.families import (
    DEFAULT_VOJTA_SAMPLES,
    finite_points,
    general_points_threshold,
    generator_set,
    kouvidakis_class,
    thm_ii_class,
    vojta2_a,
    vojta_b,
    vojta_threshold,
    vojta_vertex,
)
from seshadri.products.region import RegionCell, RegionGrid, region_sample
from seshadri.products.slopes import pole, slope_gap, slope_R, slope_R_limit
from seshadri.products.tangency import (
    TangentLine,
    line_curve_discriminant,
    tangent_from_point,
    tangent_lines,
    vojta2_slope,
)

__all__ = [
    "DEFAULT_VOJTA_SAMPLES",
    "DIAGONAL",
    "F1",
    "F2",
    "CombinationTerm",
    "CombinationWitness",
    "CxCClass",
    "FamilyTag",
    "Generality",
    "Generator",
    "Genus",
    "NefCertificate",
    "NefConeModel",
    "PairingWitness",
    "RegionCell",
    "RegionGrid",
    "TangentLine",
    "Verdict",
    "as_genus",
    "certify_nef",
    "cone_model",
    "conjecture_class",
    "difference_map_parameter",
    "finite_points",
    "general_points_threshold",
    "generator_set",
    "intersect",
    "kouvidakis_class",
    "line_curve_discriminant",
    "necessary_conditions",
    "nef_corners",
    "pole",
    "region_sample",
    "self_intersection",
    "slope_R",
    "slope_R_limit",
    "slope_gap",
    "symmetric_conjecture_class",
    "tangent_from_point",
    "tangent_lines",
    "theta_pullback",
    "thm_ii_class",
    "verify_certificate",
    "vojta2_a",
    "vojta2_slope",
    "vojta_b",
    "vojta_threshold",
    "vojta_vertex",
]
