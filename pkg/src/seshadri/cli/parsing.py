"""
Text grammars for divisor classes and curve bundles.

Classes are signed sums over ``f1``, ``f2`` and ``d`` (alias ``delta``)::

    13.7 f1 + 2 f2 - d
    (13 + 2/7*sqrt(6)) f1 + 2*f2 - delta

Bundles are comma lists of ``rank:degree`` with optional ``twist=`` and
``label=`` settings::

    1:1,1:2 twist=-1/2
"""

from __future__ import annotations

import logging
import re
from fractions import Fraction
from pathlib import Path

from seshadri.curves import CurveBundle, SemistablePiece
from seshadri.errors import MixedRadicandError, ParseError
from seshadri.exact import ExpressionParser, QuadExt, parse_number
from seshadri.models import load_bundle_file
from seshadri.products import CxCClass

logger = logging.getLogger(__name__)

SYMBOLS = {"f1": "a", "f2": "b", "d": "c", "delta": "c"}
_FUNCTIONS = {"sqrt", "root"}


def parse_class(text: str) -> CxCClass:
    if text.strip() == "0":
        return CxCClass()
    parser = ExpressionParser(text)
    coefficients = {"a": QuadExt(0), "b": QuadExt(0), "c": QuadExt(0)}
    stop = frozenset(SYMBOLS)
    first = True
    while parser.current.kind != "end":
        negative = False
        if parser.accept("-"):
            negative = True
        elif not parser.accept("+") and not first:
            raise parser.error("expected '+' or '-' between terms")
        first = False
        token = parser.current
        if token.kind == "name" and token.text not in SYMBOLS and token.text not in _FUNCTIONS:
            raise parser.error(f"unknown symbol {token.text!r}; use f1, f2 or d")
        if token.kind == "name" and token.text in SYMBOLS:
            coefficient: object = Fraction(1)
        else:
            coefficient = parser.product(stop_names=stop)
            parser.accept("*")
        symbol = parser.current
        if symbol.kind != "name" or symbol.text not in SYMBOLS:
            if symbol.kind == "name":
                raise parser.error(f"unknown symbol {symbol.text!r}; use f1, f2 or d")
            raise parser.error("missing basis symbol (f1, f2 or d)")
        parser.position += 1
        if not isinstance(coefficient, (Fraction, QuadExt)):
            raise parser.error("coefficients must be rational or quadratic surds", token)
        value = QuadExt.coerce(coefficient)
        key = SYMBOLS[symbol.text]
        try:
            coefficients[key] = coefficients[key] + (-value if negative else value)
        except MixedRadicandError as exc:
            raise parser.error(str(exc), symbol) from exc
    if first:
        raise parser.error("empty class")
    return CxCClass(**coefficients)


_OPTION = re.compile(r"(?P<key>[a-z_]+)=(?P<value>\S*)")


def parse_bundle(text: str) -> CurveBundle:
    """Parse the inline bundle grammar, or load a YAML/JSON document when ``text`` is a file path."""
    candidate = Path(text)
    if candidate.suffix in (".yaml", ".yml", ".json") and candidate.exists():
        return load_bundle_file(candidate)
    pieces: list[SemistablePiece] = []
    twist = Fraction(0)
    label = None
    seen_pieces = False
    for match in re.finditer(r"\S+", text):
        word, start = match.group(), match.start()
        option = _OPTION.fullmatch(word)
        if option:
            key, value = option.group("key"), option.group("value")
            if key == "twist":
                twist = _rational(value, text, start + len(key) + 1)
            elif key == "label":
                label = value
            else:
                raise ParseError(f"unknown bundle option {key!r}", text, start)
            continue
        if seen_pieces:
            raise ParseError("pieces must be one comma-separated list", text, start)
        seen_pieces = True
        offset = start
        for item in word.split(","):
            pieces.append(_piece(item, text, offset))
            offset += len(item) + 1
    if not pieces:
        raise ParseError("a bundle needs at least one rank:degree piece", text, len(text))
    return CurveBundle(pieces=pieces, twist=twist, label=label)


def _piece(item: str, text: str, column: int) -> SemistablePiece:
    rank_text, separator, degree_text = item.partition(":")
    if not separator:
        raise ParseError("expected rank:degree", text, column)
    if not rank_text.isdigit() or int(rank_text) < 1:
        raise ParseError("rank must be a positive integer", text, column)
    degree = _rational(degree_text, text, column + len(rank_text) + 1)
    return SemistablePiece(rank=int(rank_text), degree=degree)


def _rational(value: str, text: str, column: int) -> Fraction:
    try:
        number = parse_number(value)
    except ParseError as exc:
        raise ParseError(exc.message, text, column + (exc.column or 0)) from exc
    if not isinstance(number, Fraction):
        raise ParseError("expected a rational number", text, column)
    return number


def parse_point(text: str) -> tuple[QuadExt, QuadExt]:
    """``a,b`` with exact entries."""
    parts = text.split(",")
    if len(parts) != 2:
        raise ParseError("expected a point 'a,b'", text, 0)
    values = []
    offset = 0
    for part in parts:
        number = parse_number(part) if part.strip() else None
        if not isinstance(number, (Fraction, QuadExt)):
            raise ParseError("point coordinates must be exact surds", text, offset)
        values.append(QuadExt.coerce(number))
        offset += len(part) + 1
    return values[0], values[1]


def parse_range(text: str) -> tuple[Fraction, Fraction]:
    """``lo:hi`` with rational bounds."""
    low, separator, high = text.partition(":")
    if not separator:
        raise ParseError("expected a range 'lo:hi'", text, 0)
    return _rational(low, text, 0), _rational(high, text, len(low) + 1)


__all__ = ["SYMBOLS", "parse_bundle", "parse_class", "parse_point", "parse_range"]
