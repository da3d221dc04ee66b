"""
Tests for the Seshadri calculus: catalog estimates, bound combinators,
known values and the tri-state ampleness verdict.
"""

from fractions import Fraction

import pytest
from pydantic import ValidationError

from seshadri.calculus import (
    AmplenessVerdict,
    BoundKind,
    BoundPart,
    CurveRestriction,
    ExtendedValue,
    KnownVariety,
    Relation,
    SeshadriEstimate,
    VarietyKind,
    ampleness_verdict,
    combine_lower_bounds,
    concave_combination_bound,
    cotangent_non_psef_canonical,
    cotangent_rational_curve_bound,
    det_upper_bound,
    estimate_from_catalog,
    known_value,
    line_bundle_volume_bound,
    segre_subvariety_bound,
    segre_upper_bound,
    sym_lower_bound,
    toric_seshadri,
    twist_lower_bound,
)
from seshadri.curves import CurveBundle
from seshadri.errors import CatalogError, DomainError
from seshadri.exact import QuadExt, RationalInterval
from seshadri.models import load_catalog_file


@pytest.fixture
def restrictions():
    return [
        CurveRestriction(curve_label="line", mult_x=1, restricted=CurveBundle.of((1, 1), (1, 2))),
        CurveRestriction(curve_label="conic", mult_x=1, restricted=CurveBundle.of((1, 2))),
    ]


# ============================================================
# Extended values
# ============================================================


class TestExtendedValue:
    def test_ordering(self):
        low = ExtendedValue.minus_infinity()
        high = ExtendedValue.plus_infinity()
        middle = ExtendedValue.of(-5)
        assert low < middle < high
        assert middle <= ExtendedValue.of("-5")
        assert not high < high

    def test_text(self):
        assert str(ExtendedValue.plus_infinity()) == "inf"
        assert str(ExtendedValue.minus_infinity()) == "-inf"
        assert str(ExtendedValue.of(Fraction(1, 2))) == "1/2"

    def test_exactly_one_form(self):
        with pytest.raises(ValidationError):
            ExtendedValue()
        with pytest.raises(ValidationError):
            ExtendedValue(finite=1, infinity=1)


# ============================================================
# Catalog estimates
# ============================================================


class TestCatalogEstimates:
    def test_minimum_over_curves(self, restrictions):
        estimate = estimate_from_catalog(restrictions)
        assert estimate.upper.compare(1) == 0
        assert estimate.witness_curve == "line"
        assert estimate.exact is None
        assert estimate.certified_lower is None

    def test_complete_catalog_is_exact(self, restrictions):
        estimate = estimate_from_catalog(restrictions, complete=True)
        assert estimate.exact is not None
        assert estimate.exact.compare(1) == 0
        assert estimate.certified_lower == estimate.upper

    def test_multiplicity_scales(self):
        restriction = CurveRestriction(
            curve_label="node", mult_x=2, restricted=CurveBundle.of((1, 1), (1, 2))
        )
        assert restriction.value == Fraction(1, 2)

    def test_empty_catalog_is_plus_infinity(self):
        estimate = estimate_from_catalog([])
        assert estimate.upper == ExtendedValue.plus_infinity()
        assert estimate.witness_curve is None

    def test_lower_bound_kept(self, restrictions):
        estimate = estimate_from_catalog(restrictions, lower=Fraction(1, 2))
        assert estimate.certified_lower.compare(Fraction(1, 2)) == 0

    def test_lower_above_upper_is_rejected(self, restrictions):
        with pytest.raises(DomainError):
            estimate_from_catalog(restrictions, lower=2)

    def test_toric(self):
        assert toric_seshadri([[2, 1, 1]]) == 1
        assert toric_seshadri([[3, 2], [4, 5]]) == 2
        with pytest.raises(DomainError):
            toric_seshadri([])
        with pytest.raises(DomainError):
            toric_seshadri([[1], []])


class TestCatalogDocuments:
    def test_yaml_catalog(self, tmp_path):
        path = tmp_path / "catalog.yaml"
        path.write_text(
            "bundles:\n"
            "  V: {pieces: [{rank: 1, degree: 1}, {rank: 1, degree: 2}]}\n"
            "restrictions:\n"
            "  - {curve: line, bundle: V}\n"
            "  - {curve: cusp, mult: 2, bundle: V}\n"
        )
        document = load_catalog_file(path)
        estimate = document.estimate()
        assert estimate.upper.compare(Fraction(1, 2)) == 0
        assert estimate.witness_curve == "cusp"
        assert estimate.exact is None
        assert document.estimate(complete=True).exact is not None

    def test_unknown_bundle_label(self, tmp_path):
        path = tmp_path / "catalog.yaml"
        path.write_text("restrictions:\n  - {curve: line, bundle: W}\n")
        with pytest.raises(CatalogError):
            load_catalog_file(path).estimate()

    def test_unexpected_keys(self, tmp_path):
        path = tmp_path / "catalog.yaml"
        path.write_text("restrictions: []\nextra: 1\n")
        with pytest.raises(CatalogError):
            load_catalog_file(path)

    def test_missing_file(self, tmp_path):
        with pytest.raises(CatalogError):
            load_catalog_file(tmp_path / "absent.yaml")


# ============================================================
# Bounds
# ============================================================


class TestBounds:
    def test_segre_perfect_power_is_rational(self):
        assert segre_upper_bound(8, 3, 1, 1) == 2
        # binom(3, 2) = 3
        assert segre_upper_bound(12, 2, 2, 1) == 2

    def test_segre_square_root(self):
        value = segre_upper_bound(2, 2, 1, 1)
        assert isinstance(value, QuadExt)
        assert value == QuadExt(0, 1, 2)

    def test_segre_enclosure(self):
        precision = Fraction(1, 10**6)
        box = segre_upper_bound(2, 3, 1, 1, precision)
        assert isinstance(box, RationalInterval)
        assert box.width <= precision
        assert box.lo**3 <= 2 <= box.hi**3

    def test_segre_domain(self):
        with pytest.raises(DomainError):
            segre_upper_bound(-1, 2, 1, 1)
        with pytest.raises(DomainError):
            segre_upper_bound(1, 2, 1, 0)
        with pytest.raises(DomainError):
            segre_subvariety_bound(1, 2, 2, 1, 1)

    def test_subvariety_uses_remaining_dimension(self):
        # a curve in a threefold: exponent 1, so the bound is s / (r * mult)
        assert segre_subvariety_bound(6, 3, 2, 3, 1) == 2

    def test_volume(self):
        assert line_bundle_volume_bound(4, 2) == 2
        assert line_bundle_volume_bound(27, 3, mult=8) == Fraction(3, 2)

    def test_det(self):
        assert det_upper_bound(3, 2) == Fraction(3, 2)
        with pytest.raises(DomainError):
            det_upper_bound(1, 0)

    def test_combination(self):
        assert combine_lower_bounds([("V", 1), ("W", "1/2")]) == Fraction(3, 2)
        assert combine_lower_bounds([]) == 0
        parts = [
            BoundPart(label="V", value=Fraction(1, 3), kind=BoundKind.SYM, power=3),
            BoundPart(label="h", value=2, kind=BoundKind.TWIST, coefficient=Fraction(1, 4)),
        ]
        assert combine_lower_bounds(parts) == Fraction(3, 2)

    def test_sym_and_twist(self):
        assert sym_lower_bound(Fraction(1, 2), 3) == Fraction(3, 2)
        assert twist_lower_bound(1, 2, Fraction(1, 2)) == 2
        with pytest.raises(DomainError):
            twist_lower_bound(1, 2, -1)

    def test_concave_combination(self):
        assert concave_combination_bound(1, 3, Fraction(1, 4)) == Fraction(3, 2)
        with pytest.raises(DomainError):
            concave_combination_bound(1, 3, 2)


# ============================================================
# Known values
# ============================================================


class TestKnownValues:
    def test_projective_line(self):
        entry = known_value(KnownVariety(kind=VarietyKind.PROJECTIVE_SPACE, n=1))
        assert entry.relation is Relation.EQUALS
        assert entry.value.compare(2) == 0
        assert str(entry) == "eps(TX; x) = 2 at every point"

    def test_projective_space(self):
        entry = known_value(KnownVariety(kind=VarietyKind.PROJECTIVE_SPACE, n=4))
        assert entry.value.compare(1) == 0

    def test_projective_space_needs_dimension(self):
        with pytest.raises(ValidationError):
            KnownVariety(kind=VarietyKind.PROJECTIVE_SPACE)

    def test_other_kinds(self):
        homogeneous = known_value(KnownVariety(kind=VarietyKind.HOMOGENEOUS_NON_PN))
        assert homogeneous.value.compare(0) == 0
        general = known_value(KnownVariety(kind=VarietyKind.GENERAL_TYPE_OR_PSEF_CANONICAL))
        assert general.value == ExtendedValue.minus_infinity()
        assert general.locus == "a very general point"
        for kind in (VarietyKind.CALABI_YAU_LIKE, VarietyKind.FIBRED):
            entry = known_value(KnownVariety(kind=kind))
            assert entry.relation is Relation.AT_MOST
            assert entry.value.compare(0) == 0

    def test_cotangent_entries(self):
        entry = cotangent_rational_curve_bound(2)
        assert entry.bundle == "OmegaX"
        assert entry.value.compare(-1) == 0
        assert entry.relation is Relation.AT_MOST
        with pytest.raises(DomainError):
            cotangent_rational_curve_bound(0)
        assert cotangent_non_psef_canonical().relation is Relation.LESS_THAN
        very_general = cotangent_non_psef_canonical(very_general=True)
        assert very_general.value == ExtendedValue.minus_infinity()

    def test_entry_as_estimate(self):
        estimate = cotangent_rational_curve_bound(1).as_estimate()
        assert not estimate.catalog_complete
        assert estimate.upper.compare(-2) == 0


# ============================================================
# Ampleness
# ============================================================


class TestAmpleness:
    def test_nonpositive_upper_bound(self):
        estimates = [
            SeshadriEstimate(upper=ExtendedValue.of(1), catalog_complete=True),
            SeshadriEstimate(upper=ExtendedValue.of(0)),
        ]
        assert ampleness_verdict(estimates) is AmplenessVerdict.NOT_AMPLE

    def test_positive_everywhere(self):
        estimates = [
            SeshadriEstimate(upper=ExtendedValue.of(1), catalog_complete=True),
            SeshadriEstimate(upper=ExtendedValue.of(3), lower=ExtendedValue.of(Fraction(1, 2))),
        ]
        assert ampleness_verdict(estimates) is AmplenessVerdict.AMPLE

    def test_missing_lower_bound(self):
        estimates = [
            SeshadriEstimate(upper=ExtendedValue.of(1), catalog_complete=True),
            SeshadriEstimate(upper=ExtendedValue.of(2)),
        ]
        assert ampleness_verdict(estimates) is AmplenessVerdict.UNKNOWN

    def test_zero_lower_bound_is_not_enough(self):
        estimates = [SeshadriEstimate(upper=ExtendedValue.of(2), lower=ExtendedValue.of(0))]
        assert ampleness_verdict(estimates) is AmplenessVerdict.UNKNOWN

    def test_no_points(self):
        assert ampleness_verdict([]) is AmplenessVerdict.UNKNOWN
