"""
Tests for the seshadri command line

Drives ``run`` with argument lists and checks exit codes, JSON documents
and error reporting, plus text round trips of the class and bundle grammars.
"""

import json
import random
from fractions import Fraction

import jsonlines
import pytest

from seshadri.cli import parse_bundle, parse_class, parse_point, parse_range, run
from seshadri.cli.main import EXIT_ERROR, EXIT_OK, EXIT_UNKNOWN
from seshadri.curves import CurveBundle
from seshadri.errors import ParseError
from seshadri.exact import QuadExt
from seshadri.models import load_certificate_document
from seshadri.products import CxCClass, verify_certificate

ROUND_TRIPS = 1000


def run_json(capsys, *argv: str) -> tuple[int, dict]:
    code = run([*argv, "--format", "json"])
    captured = capsys.readouterr()
    return code, json.loads(captured.out)


def random_coefficient(rng: random.Random) -> QuadExt:
    p = Fraction(rng.randint(-30, 30), rng.randint(1, 9))
    if rng.random() < 0.5:
        return QuadExt(p)
    q = Fraction(rng.choice([-1, 1]) * rng.randint(1, 20), rng.randint(1, 9))
    return QuadExt(p, q, rng.choice([2, 3, 5, 6, 7, 10]))


# ============================================================
# C x C commands
# ============================================================


class TestCertifyCommand:
    def test_nef_with_general_curve(self, capsys):
        code, document = run_json(
            capsys, "cxc", "certify", "--g", "7", "--class", "13.7 f1 + 2 f2 - d", "--generality", "general"
        )
        assert code == EXIT_OK
        assert document["schema_version"] == 1
        (certificate,) = document["certificates"]
        assert certificate["verdict"] == "Nef"
        assert certificate["generality"] == "General"
        assert certificate["target"] == {"a": "137/10", "b": "2", "c": "-1"}
        assert certificate["witness"]["kind"] == "combination"
        assert "general-points" in document["references"]

    def test_unknown_exits_with_two(self, capsys):
        code, document = run_json(capsys, "cxc", "certify", "--g", "7", "--class", "8 f1 + 2 f2 - d")
        assert code == EXIT_UNKNOWN
        assert document["certificates"][0]["verdict"] == "Unknown"

    def test_not_nef(self, capsys):
        code, document = run_json(capsys, "cxc", "certify", "--g", "7", "--class", "2 f1 + 2 f2 - delta")
        assert code == EXIT_OK
        witness = document["certificates"][0]["witness"]
        assert witness["pairing"] == "D^2"
        assert witness["value"] == "-12"

    def test_table_output(self, capsys):
        code = run(["cxc", "certify", "--g", "7", "--class", "14 f1 + 2 f2 - d"])
        assert code == EXIT_OK
        out = capsys.readouterr().out
        assert "Nef" in out
        assert "vojta" in out

    def test_documents_reverify(self, capsys, tmp_path):
        for text in ("13 f1 + 13/6 f2 - d", "2 f1 + 2 f2 - d", "(14 + sqrt(7)) f1 + 3 f2 - d"):
            code = run(["cxc", "certify", "--g", "7", "--class", text, "--format", "json"])
            assert code == EXIT_OK
            path = tmp_path / "certificate.json"
            path.write_text(capsys.readouterr().out)
            document = load_certificate_document(path)
            assert all(verify_certificate(certificate) for certificate in document.certificates)


class TestOtherProductCommands:
    def test_tangent(self, capsys):
        code, document = run_json(capsys, "cxc", "tangent", "--g", "7", "--point", "13,13/6")
        assert code == EXIT_OK
        assert document["payload"]["a_on_line"] == "13 + 2/7*sqrt(6)"
        assert document["payload"]["at_b"] == "2"

    def test_slope(self, capsys):
        code, document = run_json(capsys, "cxc", "slope", "--g", "2", "--a", "3", "--n", "10")
        assert code == EXIT_OK
        assert document["payload"]["slope"] == "-390/19"
        assert document["payload"]["limit_per_n"] == "-2"

    def test_slope_pole(self, capsys):
        assert run(["cxc", "slope", "--g", "5", "--a", "2", "--n", "4"]) == EXIT_ERROR
        assert "pole" in capsys.readouterr().err

    def test_region_json(self, capsys):
        code, document = run_json(
            capsys, "cxc", "region", "--g", "7", "--a-range", "2:14", "--b-range", "2:2", "--step", "6"
        )
        assert code == EXIT_OK
        assert document["payload"]["a_values"] == ["2", "8", "14"]
        assert document["payload"]["codes"] == [[-1, 0, 1]]

    def test_region_jsonlines(self, capsys, tmp_path):
        output = tmp_path / "region.jsonl"
        code = run(
            ["cxc", "region", "--g", "7", "--a-range", "13:14", "--b-range", "2:2", "--output", str(output)]
        )
        assert code == EXIT_OK
        capsys.readouterr()
        with jsonlines.open(output) as reader:
            rows = list(reader)
        assert [row["a"] for row in rows] == ["13", "14"]
        assert rows[-1]["verdict"] == "Nef"

    def test_generators(self, capsys):
        code, document = run_json(
            capsys, "cxc", "generators", "--g", "7", "--samples", "4", "--generality", "arbitrary"
        )
        assert code == EXIT_OK
        generators = document["payload"]["generators"]
        assert len(generators) == 15
        assert {row["family"] for row in generators} == {"fiber", "criterion", "vojta"}


# ============================================================
# Curve, bundle and calculus commands
# ============================================================


class TestCurveCommands:
    def test_seshadri(self, capsys):
        code, document = run_json(capsys, "curve", "seshadri", "--pieces", "1:1,1:2")
        assert code == EXIT_OK
        assert document["payload"]["seshadri"] == "1"

    def test_seshadri_divides_by_multiplicity(self, capsys):
        code, document = run_json(capsys, "curve", "seshadri", "--pieces", "1:1,1:2", "--mult", "2")
        assert code == EXIT_OK
        assert document["payload"]["seshadri"] == "1/2"
        with pytest.raises(SystemExit):
            run(["curve", "seshadri", "--help"])
        assert "mu_min(V) / mult" in capsys.readouterr().out

    def test_seshadri_from_file(self, capsys, tmp_path):
        path = tmp_path / "bundle.yaml"
        path.write_text("pieces:\n  - {rank: 1, degree: 2}\n")
        code, document = run_json(capsys, "curve", "seshadri", "--file", str(path), "--mult", "2")
        assert code == EXIT_OK
        assert document["payload"]["seshadri"] == "1"

    def test_hn(self, capsys):
        code, document = run_json(capsys, "curve", "hn", "--pieces", "1:1,1:2 twist=-1/2")
        assert code == EXIT_OK
        assert document["payload"]["slopes"] == ["3/2", "1/2"]

    def test_sym(self, capsys):
        code, document = run_json(capsys, "bundle", "sym", "--pieces", "1:0,1:1", "--m", "3")
        assert code == EXIT_OK
        payload = document["payload"]
        assert (payload["rank"], payload["degree"]) == (4, "6")
        assert (payload["mu_min"], payload["mu_max"]) == ("0", "3")

    def test_tensor_needs_a_second_factor(self, capsys):
        assert run(["bundle", "tensor", "--pieces", "1:1"]) == EXIT_ERROR
        assert "tensor needs" in capsys.readouterr().err


class TestCalculusCommands:
    def test_toric(self, capsys):
        code, document = run_json(capsys, "seshadri", "toric", "--line", "2,1,1")
        assert code == EXIT_OK
        assert document["payload"]["seshadri"] == 1

    def test_known_value(self, capsys):
        code, document = run_json(capsys, "seshadri", "catalog", "--known", "projective-space", "--n", "1")
        assert code == EXIT_OK
        assert document["payload"]["value"] == "2"

    def test_catalog_file(self, capsys, tmp_path):
        path = tmp_path / "catalog.yaml"
        path.write_text("restrictions:\n  - {curve: line, bundle: {pieces: [{rank: 1, degree: 1}]}}\n")
        code, document = run_json(capsys, "seshadri", "catalog", "--file", str(path))
        assert document["payload"]["exact"] is None
        code, document = run_json(capsys, "seshadri", "catalog", "--file", str(path), "--assert-complete")
        assert code == EXIT_OK
        assert document["payload"]["exact"] == "1"

    def test_bounds(self, capsys):
        code, document = run_json(capsys, "seshadri", "bounds", "--segre", "2", "--n", "2", "--lower", "V=1/2", "--lower", "W=1")
        assert code == EXIT_OK
        assert document["payload"]["segre_upper"] == "sqrt(2)"
        assert document["payload"]["tensor_lower"] == "3/2"

    @pytest.mark.parametrize(
        "points, expected, code",
        [
            (["exact=1", "upper=2,lower=1/2"], "Ample", EXIT_OK),
            (["upper=2"], "Unknown", EXIT_UNKNOWN),
            (["exact=1", "upper=-inf"], "NotAmple", EXIT_OK),
        ],
    )
    def test_verdict(self, capsys, points, expected, code):
        argv = ["seshadri", "verdict"]
        for point in points:
            argv += ["--point", point]
        exit_code, document = run_json(capsys, *argv)
        assert exit_code == code
        assert document["payload"]["verdict"] == expected

    def test_jets(self, capsys):
        code, document = run_json(capsys, "jets", "hacon", "--n", "2", "--r", "2", "--beta", "1/2")
        assert code == EXIT_OK
        assert document["payload"]["threshold"] == "1/12*sqrt(6)"
        assert document["payload"]["certified"] == 5


# ============================================================
# Errors
# ============================================================


class TestErrors:
    def test_unknown_symbol(self, capsys):
        assert run(["cxc", "certify", "--g", "7", "--class", "8 f3 + 2 f2 - d"]) == EXIT_ERROR
        err = capsys.readouterr().err
        assert "unknown symbol 'f3'" in err
        assert "^" in err

    def test_missing_argument(self, capsys):
        assert run(["cxc", "certify", "--class", "f1"]) == EXIT_ERROR
        assert "--g" in capsys.readouterr().err

    def test_genus_too_small(self, capsys):
        assert run(["cxc", "certify", "--g", "1", "--class", "f1"]) == EXIT_ERROR
        assert "genus" in capsys.readouterr().err

    def test_bad_bundle(self, capsys):
        assert run(["curve", "seshadri", "--pieces", "0:1"]) == EXIT_ERROR
        assert "rank must be a positive integer" in capsys.readouterr().err

    def test_bad_point_estimate(self, capsys):
        assert run(["seshadri", "verdict", "--point", "upper=x"]) == EXIT_ERROR
        assert capsys.readouterr().err.startswith("error:")

    def test_missing_catalog(self, capsys, tmp_path):
        assert run(["seshadri", "catalog", "--file", str(tmp_path / "absent.yaml")]) == EXIT_ERROR
        assert "cannot read" in capsys.readouterr().err


# ============================================================
# Grammars
# ============================================================


class TestGrammars:
    def test_parse_class(self):
        assert parse_class("13.7 f1 + 2 f2 - d") == CxCClass.of(Fraction(137, 10), 2, -1)
        assert parse_class("(13 + 2/7*sqrt(6)) f1 + 2*f2 - delta") == CxCClass(
            a=QuadExt(13, Fraction(2, 7), 6), b=QuadExt(2), c=QuadExt(-1)
        )
        assert parse_class("f1 + f1") == CxCClass.of(2, 0, 0)
        assert parse_class("0") == CxCClass()

    @pytest.mark.parametrize("text", ["", "f1 f2", "2 f1 +", "sqrt(2) f1 + sqrt(3) f1", "1 f4"])
    def test_parse_class_errors(self, text):
        with pytest.raises(ParseError):
            parse_class(text)

    def test_points_and_ranges(self):
        assert parse_point("9/2, 9/2") == (QuadExt(Fraction(9, 2)), QuadExt(Fraction(9, 2)))
        assert parse_range("1:5/2") == (Fraction(1), Fraction(5, 2))
        with pytest.raises(ParseError):
            parse_point("1")
        with pytest.raises(ParseError):
            parse_range("1-2")

    def test_class_round_trip(self):
        rng = random.Random(11)
        for _ in range(ROUND_TRIPS):
            cls = CxCClass(a=random_coefficient(rng), b=random_coefficient(rng), c=random_coefficient(rng))
            assert parse_class(str(cls)) == cls

    def test_bundle_round_trip(self):
        rng = random.Random(13)
        for _ in range(ROUND_TRIPS):
            pieces = [
                (rng.randint(1, 4), Fraction(rng.randint(-20, 20), rng.randint(1, 5)))
                for _ in range(rng.randint(1, 8))
            ]
            amount = Fraction(rng.randint(-6, 6), rng.randint(1, 4))
            bundle = CurveBundle.of(*pieces, twist=amount)
            assert parse_bundle(str(bundle)) == bundle
