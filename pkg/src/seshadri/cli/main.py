"""
Seshadri Toolkit Command Line

Usage:
    seshadri curve seshadri --pieces "1:1,1:2" --mult 1
    seshadri bundle sym --pieces "1:0,1:1" --m 3
    seshadri seshadri catalog --file catalog.yaml --assert-complete
    seshadri cxc certify --g 7 --class "13.7 f1 + 2 f2 - d" --generality general
    seshadri cxc region --g 5 --a-range 2:12 --b-range 1:6 --step 1/2 --output region.jsonl
    seshadri jets hacon --n 2 --r 2 --beta 1/2

Exit codes: 0 for definite answers, 2 for Unknown verdicts, 1 for input errors.
"""

from __future__ import annotations

import argparse
import logging
import sys
from fractions import Fraction
from pathlib import Path
from typing import Any, Callable, NoReturn, Optional

import jsonlines
from dotenv import load_dotenv
from pydantic import ValidationError

from seshadri.calculus import (
    AmplenessVerdict,
    BoundPart,
    ExtendedValue,
    KnownVariety,
    SeshadriEstimate,
    VarietyKind,
    ampleness_verdict,
    combine_lower_bounds,
    cotangent_non_psef_canonical,
    cotangent_rational_curve_bound,
    det_upper_bound,
    known_value,
    line_bundle_volume_bound,
    segre_subvariety_bound,
    toric_seshadri,
)
from seshadri.cli.parsing import parse_bundle, parse_class, parse_point, parse_range
from seshadri.cli.rendering import Renderer
from seshadri.curves import (
    CurveBundle,
    det,
    dual,
    hn_polygon,
    is_ample,
    is_nef,
    mu_max,
    mu_min,
    seshadri_on_curve,
    sym,
    tensor,
    tensor_power,
    twist,
)
from seshadri.errors import ParseError, SeshadriError
from seshadri.exact import QuadExt, parse_number
from seshadri.jets import (
    JetQuery,
    adjoint_result,
    hacon_result,
    line_bundle_result,
    popa_schnell_result,
)
from seshadri.models import load_bundle_file, load_catalog_file
from seshadri.products import (
    Generality,
    Verdict,
    certify_nef,
    generator_set,
    region_sample,
    slope_gap,
    slope_R,
    slope_R_limit,
    tangent_from_point,
)
from seshadri.settings import get_settings

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_ERROR = 1
EXIT_UNKNOWN = 2

_GENERALITY = {
    "arbitrary": Generality.ARBITRARY,
    "general": Generality.GENERAL,
    "very-general": Generality.VERY_GENERAL,
}

Handler = Callable[[argparse.Namespace, Renderer], int]


class CommandParser(argparse.ArgumentParser):
    """Argument errors become :class:`ParseError` so ``run`` maps them to exit 1."""

    def error(self, message: str) -> NoReturn:
        raise ParseError(f"{self.prog}: {message}")


# =============================================================================
# Argument helpers
# =============================================================================


def _rational(text: str) -> Fraction:
    value = parse_number(text)
    if not isinstance(value, Fraction):
        raise ParseError("expected a rational number", text, 0)
    return value


def _exact(text: str) -> Any:
    value = parse_number(text)
    return value.p if isinstance(value, QuadExt) and value.is_rational else value


def _positive_precision(text: str) -> Fraction:
    value = _rational(text)
    if value <= 0:
        raise ParseError("precision must be positive", text, 0)
    return value


def _bundle(args: argparse.Namespace) -> CurveBundle:
    if getattr(args, "file", None):
        return load_bundle_file(args.file)
    if not getattr(args, "pieces", None):
        raise ParseError("give a bundle with --pieces or --file")
    return parse_bundle(args.pieces)


def _bundle_summary(bundle: CurveBundle) -> dict[str, Any]:
    return {
        "bundle": str(bundle),
        "rank": bundle.rank,
        "degree": bundle.degree,
        "mu_max": mu_max(bundle),
        "mu_min": mu_min(bundle),
    }


def _estimate_payload(estimate: SeshadriEstimate) -> dict[str, Any]:
    return {
        "upper": str(estimate.upper),
        "lower": str(estimate.lower) if estimate.lower is not None else None,
        "exact": str(estimate.exact) if estimate.exact is not None else None,
        "catalog_complete": estimate.catalog_complete,
        "witness_curve": estimate.witness_curve,
    }


def _extended(text: str) -> ExtendedValue:
    text = text.strip()
    if text in ("inf", "+inf"):
        return ExtendedValue.plus_infinity()
    if text == "-inf":
        return ExtendedValue.minus_infinity()
    return ExtendedValue.of(_exact(text))


def _point_estimate(text: str) -> SeshadriEstimate:
    """``exact=v`` or ``upper=u[,lower=l]``."""
    fields: dict[str, ExtendedValue] = {}
    offset = 0
    for item in text.split(","):
        key, separator, value = item.partition("=")
        key = key.strip()
        if not separator or key not in ("exact", "upper", "lower"):
            raise ParseError("expected exact=..., upper=... or lower=...", text, offset)
        try:
            fields[key] = _extended(value)
        except ParseError as exc:
            raise ParseError(exc.message, text, offset + len(item) - len(value) + (exc.column or 0)) from exc
        offset += len(item) + 1
    if "exact" in fields:
        if len(fields) > 1:
            raise ParseError("exact= cannot be combined with other bounds", text, 0)
        return SeshadriEstimate(upper=fields["exact"], catalog_complete=True)
    if "upper" not in fields:
        raise ParseError("a point estimate needs upper= (or exact=)", text, 0)
    return SeshadriEstimate(upper=fields["upper"], lower=fields.get("lower"))


# =============================================================================
# curve / bundle
# =============================================================================


def cmd_curve_hn(args: argparse.Namespace, out: Renderer) -> int:
    bundle = _bundle(args)
    polygon = hn_polygon(bundle)
    payload = _bundle_summary(bundle)
    payload["polygon"] = [f"({rank}, {degree})" for rank, degree in polygon.vertices]
    payload["slopes"] = polygon.slopes
    out.emit("Harder-Narasimhan polygon", payload)
    return EXIT_OK


def cmd_curve_seshadri(args: argparse.Namespace, out: Renderer) -> int:
    bundle = _bundle(args)
    value = seshadri_on_curve(bundle, args.mult)
    out.emit("Seshadri constant on a curve", {"bundle": str(bundle), "mult": args.mult, "seshadri": value})
    return EXIT_OK


def cmd_curve_nef(args: argparse.Namespace, out: Renderer) -> int:
    bundle = _bundle(args)
    payload = _bundle_summary(bundle)
    payload.update(nef=is_nef(bundle), ample=is_ample(bundle))
    out.emit("positivity", payload)
    return EXIT_OK


def cmd_bundle(args: argparse.Namespace, out: Renderer) -> int:
    bundle = _bundle(args)
    operation = args.operation
    if operation == "sym":
        result = sym(bundle, args.m)
    elif operation == "tensor":
        if args.with_bundle:
            result = tensor(bundle, parse_bundle(args.with_bundle))
        elif args.m is not None:
            result = tensor_power(bundle, args.m)
        else:
            raise ParseError("tensor needs --with or --m")
    elif operation == "det":
        result = det(bundle)
    elif operation == "dual":
        result = dual(bundle)
    else:
        result = twist(bundle, args.by)
    out.emit(f"bundle {operation}", _bundle_summary(result))
    return EXIT_OK


# =============================================================================
# seshadri calculus
# =============================================================================


def cmd_catalog(args: argparse.Namespace, out: Renderer) -> int:
    if args.file:
        document = load_catalog_file(args.file)
        estimate = document.estimate(complete=True if args.assert_complete else None)
        out.emit("catalog estimate", _estimate_payload(estimate))
        return EXIT_OK
    if args.known:
        entry = known_value(KnownVariety(kind=VarietyKind(args.known), n=args.n))
    elif args.rational_curve is not None:
        entry = cotangent_rational_curve_bound(args.rational_curve)
    elif args.uniruled:
        entry = cotangent_non_psef_canonical(very_general=args.very_general)
    else:
        raise ParseError("catalog needs --file, --known, --rational-curve or --uniruled")
    out.emit(
        "known value",
        {"statement": str(entry), "relation": entry.relation.value, "value": str(entry.value), "locus": entry.locus},
    )
    return EXIT_OK


def cmd_toric(args: argparse.Namespace, out: Renderer) -> int:
    splittings = []
    for line in args.line:
        try:
            splittings.append([int(part) for part in line.split(",")])
        except ValueError as exc:
            raise ParseError("splittings are comma lists of integers", line, 0) from exc
    value = toric_seshadri(splittings)
    out.emit("toric Seshadri constant", {"lines": args.line, "seshadri": value})
    return EXIT_OK


def cmd_bounds(args: argparse.Namespace, out: Renderer) -> int:
    payload: dict[str, Any] = {}
    if args.segre is not None:
        if args.n is None:
            raise ParseError("--segre needs --n")
        payload["segre_upper"] = segre_subvariety_bound(
            args.segre, args.n, args.codim, args.rank, args.mult, args.precision
        )
    if args.volume is not None:
        if args.n is None:
            raise ParseError("--volume needs --n")
        payload["volume_upper"] = line_bundle_volume_bound(args.volume, args.n, args.mult, args.precision)
    if args.det_value is not None:
        payload["det_upper"] = det_upper_bound(args.det_value, args.rank)
    if args.lower:
        parts = []
        for item in args.lower:
            label, separator, value = item.partition("=")
            if not separator:
                raise ParseError("expected label=value", item, 0)
            parts.append(BoundPart(label=label, value=_rational(value)))
        payload["tensor_lower"] = combine_lower_bounds(parts)
    if not payload:
        raise ParseError("bounds needs --segre, --volume, --det-value or --lower")
    out.emit("Seshadri bounds", payload)
    return EXIT_OK


def cmd_verdict(args: argparse.Namespace, out: Renderer) -> int:
    estimates = [_point_estimate(text) for text in args.point]
    verdict = ampleness_verdict(estimates)
    out.emit("ampleness", {"points": args.point, "verdict": verdict.value})
    return EXIT_UNKNOWN if verdict is AmplenessVerdict.UNKNOWN else EXIT_OK


# =============================================================================
# C x C
# =============================================================================


def cmd_certify(args: argparse.Namespace, out: Renderer) -> int:
    cls = parse_class(args.cls)
    certificate = certify_nef(cls, args.g, _GENERALITY[args.generality])
    out.certificate(certificate)
    return EXIT_UNKNOWN if certificate.verdict is Verdict.UNKNOWN else EXIT_OK


def cmd_region(args: argparse.Namespace, out: Renderer) -> int:
    grid = region_sample(
        args.g,
        parse_range(args.a_range),
        parse_range(args.b_range),
        args.step,
        _GENERALITY[args.generality],
    )
    if args.output:
        with jsonlines.open(args.output, mode="w") as writer:
            writer.write_all(grid.rows())
        logger.info("wrote %d cells to %s", len(grid.cells), args.output)
    codes = grid.as_array()
    if out.as_json:
        out.document(
            {
                "genus": grid.genus,
                "a_values": list(grid.a_values),
                "b_values": list(grid.b_values),
                "codes": codes.tolist(),
            }
        )
        return EXIT_OK
    columns = ["b \\ a", *(str(a) for a in grid.a_values)]
    rows = [[str(b), *(str(code) for code in codes[i])] for i, b in reversed(list(enumerate(grid.b_values)))]
    out.table(f"nef region, g={grid.genus} (-1 NotNef, 0 Unknown, 1-3 Nef by generality)", columns, rows)
    return EXIT_OK


def cmd_slope(args: argparse.Namespace, out: Renderer) -> int:
    out.emit(
        "slope of R",
        {
            "slope": slope_R(args.g, args.a, args.n),
            "limit_per_n": slope_R_limit(args.g, args.a),
            "gap": slope_gap(args.g, args.a, args.n),
        },
    )
    return EXIT_OK


def cmd_tangent(args: argparse.Namespace, out: Renderer) -> int:
    point = parse_point(args.point)
    line = tangent_from_point(args.g, point, args.b_max)
    payload: dict[str, Any] = {
        "touch_a": line.touch_a,
        "touch_b": line.touch_b,
        "da_db": line.da_db,
        "db_da": line.db_da,
    }
    if args.at_b is not None:
        payload["at_b"] = args.at_b
        payload["a_on_line"] = line.a_at(args.at_b)
    out.emit(f"tangent from ({args.point})", payload)
    return EXIT_OK


def cmd_generators(args: argparse.Namespace, out: Renderer) -> int:
    generators = generator_set(args.g, _GENERALITY[args.generality], args.samples)
    rows = [
        [generator.family.value, generator.generality.value, str(generator.cls), generator.swapped]
        for generator in generators
    ]
    out.listing(f"nef generators, g={args.g}", ["family", "generality", "class", "swapped"], rows, "generators")
    return EXIT_OK


# =============================================================================
# jets
# =============================================================================


def cmd_jets(args: argparse.Namespace, out: Renderer) -> int:
    values = {key: getattr(args, key) for key in ("n", "r", "k", "m", "s", "p", "beta", "eps")}
    query = JetQuery(**{key: value for key, value in values.items() if value is not None})
    if args.statement == "hacon":
        result = hacon_result(query)
    elif args.statement == "adjoint":
        result = adjoint_result(query)
    elif args.statement == "popa-schnell":
        result = popa_schnell_result(query)
    else:
        result = line_bundle_result(query, low_dim_ample=args.low_dim_ample)
    payload: dict[str, Any] = {"statement": result.name, **result.inputs}
    payload.update(
        threshold=result.threshold,
        certified=result.certified,
        impossible=result.impossible,
        holds_at=result.qualifier,
    )
    out.emit(f"jets {result.name}", payload)
    return EXIT_OK


# =============================================================================
# Parser
# =============================================================================


def _global_options(parser: argparse.ArgumentParser, default: Any) -> None:
    parser.add_argument("--format", choices=["table", "json"], default=default, help="Output format")
    parser.add_argument("--precision", type=_positive_precision, default=default, help="Enclosure width, e.g. 1/10^9")
    parser.add_argument("--decimals", type=int, default=default, help="Digits of advisory decimals (0 disables)")
    parser.add_argument("--verbose", "-v", action="store_true", default=default, help="Debug logging")


def _bundle_inputs(parser: argparse.ArgumentParser) -> None:
    source = parser.add_mutually_exclusive_group()
    source.add_argument("--pieces", help='Inline bundle, e.g. "1:1,1:2 twist=-1/2" (or a YAML/JSON path)')
    source.add_argument("--file", type=Path, help="Bundle document (YAML or JSON)")


def _leaf(
    group: argparse._SubParsersAction,
    name: str,
    handler: Handler,
    parent: argparse.ArgumentParser,
    help_text: str,
) -> argparse.ArgumentParser:
    parser = group.add_parser(name, parents=[parent], help=help_text, description=help_text)
    parser.set_defaults(handler=handler)
    return parser


def _generality_option(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--generality",
        choices=list(_GENERALITY),
        default="very-general",
        help="Strongest hypothesis on the curve C the certificate may use",
    )


def build_parser() -> CommandParser:
    parser = CommandParser(
        prog="seshadri",
        description="Exact Seshadri constants, nef cones of C x C and jet thresholds",
        formatter_class=argparse.RawDescriptionHelpFormatter,
    )
    _global_options(parser, None)
    leaf_parent = CommandParser(add_help=False)
    _global_options(leaf_parent, argparse.SUPPRESS)

    areas = parser.add_subparsers(dest="area", required=True, parser_class=CommandParser)

    # curve
    curve = areas.add_parser("curve", help="Bundles on a smooth curve").add_subparsers(
        dest="command", required=True, parser_class=CommandParser
    )
    hn = _leaf(curve, "hn", cmd_curve_hn, leaf_parent, "Harder-Narasimhan polygon and extremal slopes")
    _bundle_inputs(hn)
    seshadri = _leaf(curve, "seshadri", cmd_curve_seshadri, leaf_parent, "mu_min(V) / mult")
    _bundle_inputs(seshadri)
    seshadri.add_argument("--mult", type=int, default=1, help="Multiplicity of the curve at the point")
    nef = _leaf(curve, "nef", cmd_curve_nef, leaf_parent, "Nefness and ampleness on the curve")
    _bundle_inputs(nef)

    # bundle
    bundle = areas.add_parser("bundle", help="Slope arithmetic of bundle operations").add_subparsers(
        dest="operation", required=True, parser_class=CommandParser
    )
    for operation, help_text in (
        ("sym", "Symmetric power Sym^m"),
        ("tensor", "Tensor product with --with, or tensor power --m"),
        ("det", "Determinant"),
        ("dual", "Dual bundle"),
        ("twist", "Twist by a rational multiple of a degree-one class"),
    ):
        leaf = _leaf(bundle, operation, cmd_bundle, leaf_parent, help_text)
        _bundle_inputs(leaf)
        if operation == "sym":
            leaf.add_argument("--m", type=int, required=True)
        elif operation == "tensor":
            leaf.add_argument("--with", dest="with_bundle", help="Second bundle")
            leaf.add_argument("--m", type=int, help="Tensor power")
        elif operation == "twist":
            leaf.add_argument("--by", type=_rational, required=True)

    # seshadri
    calculus = areas.add_parser("seshadri", help="Seshadri constants on higher-dimensional varieties").add_subparsers(
        dest="command", required=True, parser_class=CommandParser
    )
    catalog = _leaf(calculus, "catalog", cmd_catalog, leaf_parent, "Curve catalogs and known values")
    catalog.add_argument("--file", type=Path, help="Catalog document (YAML or JSON)")
    catalog.add_argument("--assert-complete", action="store_true", help="Treat the catalog as all curves through x")
    catalog.add_argument("--known", choices=[kind.value for kind in VarietyKind], help="Known tangent-bundle value")
    catalog.add_argument("--n", type=int, help="Dimension for --known projective-space")
    catalog.add_argument("--rational-curve", type=int, metavar="MULT", help="Cotangent bound from a rational curve")
    catalog.add_argument("--uniruled", action="store_true", help="Cotangent bound when K_X is not pseudo-effective")
    catalog.add_argument("--very-general", action="store_true", help="Evaluate at a very general point")

    toric = _leaf(calculus, "toric", cmd_toric, leaf_parent, "Toric rule over invariant lines")
    toric.add_argument("--line", action="append", required=True, help='Splitting degrees, e.g. "2,1,1"')

    bounds = _leaf(calculus, "bounds", cmd_bounds, leaf_parent, "Upper and lower bounds")
    bounds.add_argument("--segre", type=_rational, help="Segre number of the dual bundle")
    bounds.add_argument("--volume", type=_rational, help="Top self-intersection of a line bundle")
    bounds.add_argument("--det-value", type=_rational, help="Seshadri constant of det V")
    bounds.add_argument("--lower", action="append", help="Factor lower bound label=value (repeatable)")
    bounds.add_argument("--n", type=int, help="Dimension")
    bounds.add_argument("--codim", type=int, default=0, help="Codimension of the subvariety Z")
    bounds.add_argument("--rank", type=int, default=1)
    bounds.add_argument("--mult", type=int, default=1)

    verdict = _leaf(calculus, "verdict", cmd_verdict, leaf_parent, "Ampleness from point estimates")
    verdict.add_argument("--point", action="append", required=True, help='"exact=1" or "upper=2,lower=1/2"')

    # cxc
    cxc = areas.add_parser("cxc", help="Divisor classes on C x C").add_subparsers(
        dest="command", required=True, parser_class=CommandParser
    )
    certify = _leaf(cxc, "certify", cmd_certify, leaf_parent, "Certify a class nef or not nef")
    certify.add_argument("--g", type=int, required=True, help="Genus of C")
    certify.add_argument("--class", dest="cls", required=True, help='e.g. "13.7 f1 + 2 f2 - d"')
    _generality_option(certify)

    region = _leaf(cxc, "region", cmd_region, leaf_parent, "Sample verdicts over a grid of a f1 + b f2 - d")
    region.add_argument("--g", type=int, required=True)
    region.add_argument("--a-range", required=True, help="lo:hi")
    region.add_argument("--b-range", required=True, help="lo:hi")
    region.add_argument("--step", type=_rational, default=Fraction(1))
    region.add_argument("--output", type=Path, help="Write cells as JSON lines")
    _generality_option(region)

    slope = _leaf(cxc, "slope", cmd_slope, leaf_parent, "Slope of the auxiliary bundle R")
    slope.add_argument("--g", type=int, required=True)
    slope.add_argument("--a", type=_rational, required=True)
    slope.add_argument("--n", type=int, required=True)

    tangent = _leaf(cxc, "tangent", cmd_tangent, leaf_parent, "Tangent from a point to the Vojta curve")
    tangent.add_argument("--g", type=int, required=True)
    tangent.add_argument("--point", required=True, help='"a,b"')
    tangent.add_argument("--b-max", type=_rational, default=Fraction(2))
    tangent.add_argument("--at-b", type=_rational, default=Fraction(2), help="Report a on the line at this b")

    generators = _leaf(cxc, "generators", cmd_generators, leaf_parent, "List the known nef generators")
    generators.add_argument("--g", type=int, required=True)
    generators.add_argument("--samples", type=int, default=None, help="Sample points per Vojta arc")
    _generality_option(generators)

    # jets
    jets = areas.add_parser("jets", help="Jet separation thresholds").add_subparsers(
        dest="statement", required=True, parser_class=CommandParser
    )
    for statement, help_text in (
        ("hacon", "Least lambda for jets of Sym^lambda V at very general points"),
        ("adjoint", "Threshold and least p for jets of K + Sym^p V + det V"),
        ("popa-schnell", "Threshold and least m for the Popa-Schnell type statement"),
        ("line-bundle", "Least l for the line-bundle statement"),
    ):
        leaf = _leaf(jets, statement, cmd_jets, leaf_parent, help_text)
        for name in ("n", "r", "k", "m", "s", "p"):
            leaf.add_argument(f"--{name}", type=int)
        leaf.add_argument("--beta", type=_rational)
        leaf.add_argument("--eps", type=_exact, help="Seshadri constant at the point (exact)")
        leaf.add_argument("--low-dim-ample", action="store_true", help="Sharper bound for ample bundles, n <= 3")
    return parser


# =============================================================================
# Entry points
# =============================================================================


def _report(exc: Exception) -> None:
    if isinstance(exc, ParseError) and exc.text:
        sys.stderr.write(f"error: {exc.annotated()}\n")
    else:
        sys.stderr.write(f"error: {exc}\n")


def run(argv: Optional[list[str]] = None) -> int:
    """Parse ``argv``, dispatch and return the exit code."""
    argv = list(sys.argv[1:] if argv is None else argv)
    try:
        settings = get_settings()
        args = build_parser().parse_args(argv)
        for key, default in (
            ("format", settings.default_format),
            ("precision", settings.precision),
            ("decimals", settings.decimal_digits),
            ("verbose", False),
        ):
            if getattr(args, key, None) is None:
                setattr(args, key, default)
        if getattr(args, "samples", 0) is None:
            args.samples = settings.vojta_samples
        if args.verbose:
            logging.getLogger("seshadri").setLevel(logging.DEBUG)
        renderer = Renderer(args.format, args.decimals, argv)
        return args.handler(args, renderer)
    except (SeshadriError, ValidationError) as exc:
        logger.debug("command failed", exc_info=True)
        _report(exc)
        return EXIT_ERROR


def main() -> None:
    load_dotenv()
    try:
        level = get_settings().log_level
    except SeshadriError:
        level = "WARNING"
    logging.basicConfig(
        level=getattr(logging, level, logging.WARNING),
        format="%(asctime)s [%(levelname)s] %(message)s",
        stream=sys.stderr,
    )
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
