"""
Tests for exact numbers

Quadratic surds, canonical radicals, rational enclosures, ordering across
all representations and the text forms used by documents and the CLI.
"""

import math
import random
from fractions import Fraction

import pytest
from pydantic import BaseModel

from seshadri.errors import DomainError, MixedRadicandError, ParseError
from seshadri.exact import (
    ExactField,
    Ordering,
    QuadExt,
    Radical,
    RationalField,
    RationalInterval,
    ceil_exact,
    coerce_rational,
    compare,
    enclose,
    exact_max,
    exact_min,
    floor_exact,
    format_number,
    mixed_sum,
    nth_root,
    parse_number,
    quad_compare_mixed,
    root_bracket,
    squarefree_part,
    to_decimal,
)

SQRT2 = QuadExt.sqrt(2)
SQRT3 = QuadExt.sqrt(3)


@pytest.fixture
def rng():
    return random.Random(20240611)


def random_surd(rng: random.Random) -> QuadExt:
    p = Fraction(rng.randint(-50, 50), rng.randint(1, 12))
    q = Fraction(rng.randint(-20, 20), rng.randint(1, 12))
    return QuadExt(p, q, rng.choice([0, 2, 3, 5, 6, 7, 10, 12, 18]))


# ============================================================
# Quadratic surds
# ============================================================


class TestQuadExt:
    """Normalization, field arithmetic and exact ordering."""

    def test_square_factors_move_into_q(self):
        assert QuadExt(1, 1, 8) == QuadExt(1, 2, 2)
        assert QuadExt(0, 1, 12).d == 3
        assert squarefree_part(72) == (6, 2)

    def test_perfect_squares_fold_to_rationals(self):
        value = QuadExt(3, 2, 4)
        assert value.is_rational
        assert value == 7
        assert QuadExt.sqrt(Fraction(9, 4)) == Fraction(3, 2)

    def test_sqrt_of_fraction(self):
        # sqrt(2/3) = sqrt(6)/3
        assert QuadExt.sqrt(Fraction(2, 3)) == QuadExt(0, Fraction(1, 3), 6)

    def test_field_arithmetic(self):
        assert (1 + SQRT2) * (1 - SQRT2) == -1
        assert 1 / (1 + SQRT2) == SQRT2 - 1
        assert (1 + SQRT2) ** 2 == QuadExt(3, 2, 2)
        assert (1 + SQRT2) ** -1 == SQRT2 - 1

    def test_mixed_radicands_raise(self):
        with pytest.raises(MixedRadicandError):
            _ = SQRT2 + SQRT3
        with pytest.raises(MixedRadicandError):
            _ = SQRT2 * SQRT3

    def test_division_by_zero(self):
        with pytest.raises(ZeroDivisionError):
            _ = SQRT2 / QuadExt(0)

    def test_sign_of_close_values(self):
        # 3 - 2*sqrt(2) = 0.1715..., 1 - sqrt(2) < 0
        assert QuadExt(3, -2, 2).sign() == 1
        assert QuadExt(1, -1, 2).sign() == -1
        assert QuadExt(0).sign() == 0

    def test_mixed_comparison(self):
        # sqrt(2) = 1.414... > 3 - sqrt(3) = 1.267...
        assert quad_compare_mixed(SQRT2, 3 - SQRT3) is Ordering.GREATER
        assert quad_compare_mixed(3 - SQRT3, SQRT2) is Ordering.LESS
        assert SQRT3 > SQRT2
        assert QuadExt(4) < 1 + 2 * SQRT3

    def test_random_comparisons_agree_with_floats(self, rng):
        checked = 0
        for _ in range(400):
            x, y = random_surd(rng), random_surd(rng)
            fx, fy = float(x), float(y)
            if abs(fx - fy) < 1e-9:
                continue
            expected = Ordering.GREATER if fx > fy else Ordering.LESS
            assert quad_compare_mixed(x, y) is expected, (x, y)
            checked += 1
        assert checked > 300

    def test_rational_values_hash_like_fractions(self):
        assert hash(QuadExt(Fraction(5, 2))) == hash(Fraction(5, 2))
        assert {QuadExt(2): "x"}[Fraction(2)] == "x"

    def test_coerce_rejects_floats(self):
        with pytest.raises(DomainError):
            QuadExt.coerce(1.5)  # type: ignore[arg-type]
        assert QuadExt.coerce("1 + sqrt(2)") == 1 + SQRT2

    def test_negative_radicand_rejected(self):
        with pytest.raises(DomainError):
            QuadExt(0, 1, -2)
        with pytest.raises(DomainError):
            QuadExt.sqrt(-1)


# ============================================================
# Radicals
# ============================================================


class TestRadical:
    """Canonical forms and exact comparison of higher roots."""

    def test_build_simplifies(self):
        assert Radical.build(8, 3) == Fraction(2)
        assert Radical.build(12, 2) == QuadExt(0, 2, 3)
        assert Radical.build(16, 4) == Fraction(2)
        # 4 ** (1/4) is sqrt(2)
        assert Radical.build(4, 4) == SQRT2
        assert Radical.build(0, 5, offset=3) == Fraction(3)

    def test_build_canonical_radical(self):
        assert Radical.build(2, 3) == Radical(Fraction(0), Fraction(1), 2, 3)
        # (1/2) ** (1/3) = 4 ** (1/3) / 2
        assert Radical.build(Fraction(1, 2), 3) == Radical(Fraction(0), Fraction(1, 2), 4, 3)
        # 54 ** (1/3) = 3 * 2 ** (1/3)
        assert Radical.build(54, 3) == Radical(Fraction(0), Fraction(3), 2, 3)

    def test_negative_radicand(self):
        with pytest.raises(DomainError):
            Radical.build(-2, 3)

    def test_compare_with_rationals(self):
        cube_root_2 = Radical.build(2, 3)
        assert compare(cube_root_2, Fraction(5, 4)) is Ordering.GREATER
        assert compare(cube_root_2, Fraction(127, 100)) is Ordering.LESS
        assert compare(Fraction(5, 4), cube_root_2) is Ordering.LESS
        assert -cube_root_2 < -1

    def test_compare_radicals_by_powering(self):
        # 2 ** (1/3) = 1.2599 < 3 ** (1/4) = 1.3160
        assert compare(Radical.build(2, 3), Radical.build(3, 4)) is Ordering.LESS
        assert compare(Radical.build(3, 4), Radical.build(2, 3)) is Ordering.GREATER

    def test_compare_radical_with_surd(self):
        assert compare(Radical.build(2, 3), SQRT2) is Ordering.LESS
        assert compare(Radical.build(3, 3) + 1, SQRT2 + 1) is Ordering.GREATER

    def test_floor_and_ceil(self):
        # 999 ** (1/3) = 9.9966...
        root = Radical.build(999, 3)
        assert floor_exact(root) == 9
        assert ceil_exact(root) == 10
        assert floor_exact(-root) == -10
        assert floor_exact(SQRT2) == 1
        assert floor_exact(-SQRT2) == -2
        assert ceil_exact(Fraction(7, 2)) == 4

    def test_reciprocal(self):
        root = Radical.build(2, 3)
        # 1 / 2 ** (1/3) = 4 ** (1/3) / 2
        assert 1 / root == Radical(Fraction(0), Fraction(1, 2), 4, 3)

    def test_nth_root_kinds(self):
        assert nth_root(27, 3) == Fraction(3)
        assert nth_root(2, 2) == SQRT2
        box = nth_root(2, 3, Fraction(1, 10**6))
        assert isinstance(box, RationalInterval)
        assert box.lo**3 <= 2 <= box.hi**3
        assert box.width <= Fraction(1, 10**6)


# ============================================================
# Enclosures
# ============================================================


class TestIntervals:
    """Certified enclosures and their arithmetic."""

    def test_root_bracket(self):
        box = root_bracket(Fraction(2), 2, Fraction(1, 1000))
        assert box.lo**2 <= 2 <= box.hi**2
        assert box.width <= Fraction(1, 1000)
        assert root_bracket(Fraction(9, 4), 2, Fraction(1, 10)) == RationalInterval(Fraction(3, 2))

    def test_enclose_surd(self):
        value = QuadExt(13, Fraction(2, 7), 6)
        box = enclose(value, Fraction(1, 10**9))
        assert box.width <= Fraction(1, 10**9)
        # 13 + 2*sqrt(6)/7 = 13.69985421...
        assert Fraction(136998542, 10**7) < box.lo
        assert box.hi < Fraction(136998543, 10**7)

    def test_interval_arithmetic(self):
        first = RationalInterval(1, 2)
        second = RationalInterval(-1, 3)
        assert first * second == RationalInterval(-2, 6)
        assert first + second == RationalInterval(0, 5)
        assert first - second == RationalInterval(-2, 3)
        assert 2 * first == RationalInterval(2, 4)

    def test_empty_interval_rejected(self):
        with pytest.raises(DomainError):
            RationalInterval(2, 1)

    def test_mixed_sum(self):
        exact = mixed_sum(SQRT2, 1, Fraction(1, 2))
        assert exact == QuadExt(Fraction(3, 2), 1, 2)
        box = mixed_sum(SQRT2, SQRT3)
        assert isinstance(box, RationalInterval)
        # sqrt(2) + sqrt(3) = 3.14626437...
        assert Fraction(3146264, 10**6) < box.lo
        assert box.hi < Fraction(3146265, 10**6)
        assert box.width <= Fraction(1, 10**12)

    def test_compare_intervals(self):
        assert compare(RationalInterval(0, 1), RationalInterval(2, 3)) is Ordering.LESS
        with pytest.raises(DomainError):
            compare(RationalInterval(0, 2), RationalInterval(1, 3))


# ============================================================
# Ordering helpers
# ============================================================


class TestOrderingHelpers:
    def test_min_max_across_kinds(self):
        values = [Fraction(3, 2), SQRT2, Radical.build(3, 3), QuadExt(1, 1, 5)]
        assert exact_min(*values) == SQRT2
        assert exact_max(*values) == QuadExt(1, 1, 5)

    def test_empty_min(self):
        with pytest.raises(DomainError):
            exact_min()

    def test_to_decimal(self):
        assert to_decimal(SQRT2, 6) == "1.414214"
        assert to_decimal(Fraction(1, 3), 4) == "0.3333"
        assert to_decimal(QuadExt(0, Fraction(1, 12), 6), 6) == "0.204124"
        assert to_decimal(Fraction(5), 0) == "5"

    def test_to_decimal_matches_float(self, rng):
        for _ in range(100):
            value = random_surd(rng)
            assert math.isclose(float(to_decimal(value, 8)), float(value), abs_tol=1e-7)


# ============================================================
# Text forms
# ============================================================


class TestTextForms:
    """parse_number and format_number."""

    def test_decimals_are_exact(self):
        assert parse_number("13.7") == Fraction(137, 10)
        assert parse_number(".5") == Fraction(1, 2)

    def test_surd_forms(self):
        value = parse_number("13 + 2/7*sqrt(6)")
        assert value == QuadExt(13, Fraction(2, 7), 6)
        assert format_number(value) == "13 + 2/7*sqrt(6)"
        assert format_number(QuadExt(13, Fraction(-2, 7), 6)) == "13 - 2/7*sqrt(6)"
        assert format_number(-SQRT2) == "-sqrt(2)"

    def test_non_squarefree_radicand_is_normalized(self):
        value = parse_number("sqrt(8)")
        assert value == QuadExt(0, 2, 2)
        assert format_number(value) == "2*sqrt(2)"

    def test_radical_and_interval_forms(self):
        radical = parse_number("1/3*root(4, 3)")
        assert radical == Radical(Fraction(0), Fraction(1, 3), 4, 3)
        assert format_number(radical) == "1/3*root(4, 3)"
        assert parse_number("[1/2, 3/4]") == RationalInterval(Fraction(1, 2), Fraction(3, 4))
        assert format_number(RationalInterval(Fraction(1, 2), Fraction(3, 4))) == "[1/2, 3/4]"

    @pytest.mark.parametrize(
        "text",
        ["1 +", "2/0", "sqrt(-2)", "sqrt(2", "1 $ 2", "sqrt(2) + sqrt(3)", "[2, 1]"],
    )
    def test_malformed_input(self, text):
        with pytest.raises(ParseError):
            parse_number(text)

    def test_error_column_points_at_problem(self):
        with pytest.raises(ParseError) as info:
            parse_number("2/0")
        assert info.value.column == 1
        assert "^" in info.value.annotated()

    def test_round_trip(self, rng):
        for _ in range(300):
            value = random_surd(rng)
            parsed = parse_number(format_number(value))
            assert QuadExt.coerce(parsed) == value


# ============================================================
# Pydantic field types
# ============================================================


class ExactRecord(BaseModel):
    model_config = {"arbitrary_types_allowed": True}

    rational: RationalField
    value: ExactField


class TestFieldTypes:
    def test_json_mode_writes_strings(self):
        record = ExactRecord(rational="13/6", value="1 + sqrt(2)")
        dumped = record.model_dump(mode="json")
        assert dumped == {"rational": "13/6", "value": "1 + sqrt(2)"}
        assert ExactRecord.model_validate(dumped) == record

    def test_python_mode_keeps_values(self):
        record = ExactRecord(rational=3, value=Fraction(1, 2))
        dumped = record.model_dump()
        assert isinstance(dumped["rational"], Fraction)
        assert dumped == {"rational": Fraction(3), "value": Fraction(1, 2)}
        surd = ExactRecord(rational="1/2", value="1 + sqrt(2)").model_dump()["value"]
        assert isinstance(surd, QuadExt)
        assert surd == 1 + QuadExt.sqrt(2)
        assert record.model_dump(mode="json") == {"rational": "3", "value": "1/2"}

    def test_yaml_floats_read_as_decimals(self):
        assert coerce_rational(13.7) == Fraction(137, 10)

    def test_bad_values_fail_validation(self):
        with pytest.raises(ValueError):
            ExactRecord(rational="sqrt(2)", value=1)
