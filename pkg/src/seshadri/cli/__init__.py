"""Command-line front end: grammars, rendering and dispatch."""

from seshadri.cli.main import build_parser, main, run
from seshadri.cli.parsing import parse_bundle, parse_class, parse_point, parse_range

__all__ = [
    "build_parser",
    "main",
    "parse_bundle",
    "parse_class",
    "parse_point",
    "parse_range",
    "run",
]
