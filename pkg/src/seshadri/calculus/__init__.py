"""
Seshadri calculus on higher-dimensional varieties.

1. **Estimates** - curve catalogs to upper bounds, the toric rule, the
   tri-state ampleness verdict and signed extended values.
2. **Bounds** - Segre and determinant upper bounds; tensor, symmetric,
   twist and concavity lower-bound combinators.
3. **Catalog** - known values for tangent and cotangent bundles.
"""

from seshadri.calculus.bounds import (
    BoundKind,
    BoundPart,
    combine_lower_bounds,
    concave_combination_bound,
    det_upper_bound,
    line_bundle_volume_bound,
    segre_subvariety_bound,
    segre_upper_bound,
    sym_lower_bound,
    twist_lower_bound,
)
from seshadri.calculus.catalog import (
    CatalogEntry,
    KnownVariety,
    Relation,
    VarietyKind,
    cotangent_non_psef_canonical,
    cotangent_rational_curve_bound,
    known_value,
)
from seshadri.calculus.estimates import (
    AmplenessVerdict,
    CurveRestriction,
    ExtendedValue,
    SeshadriEstimate,
    ampleness_verdict,
    estimate_from_catalog,
    toric_seshadri,
)

__all__ = [
    "AmplenessVerdict",
    "BoundKind",
    "BoundPart",
    "CatalogEntry",
    "CurveRestriction",
    "ExtendedValue",
    "KnownVariety",
    "Relation",
    "SeshadriEstimate",
    "VarietyKind",
    "ampleness_verdict",
    "combine_lower_bounds",
    "concave_combination_bound",
    "cotangent_non_psef_canonical",
    "cotangent_rational_curve_bound",
    "det_upper_bound",
    "estimate_from_catalog",
    "known_value",
    "line_bundle_volume_bound",
    "segre_subvariety_bound",
    "segre_upper_bound",
    "sym_lower_bound",
    "toric_seshadri",
    "twist_lower_bound",
]
