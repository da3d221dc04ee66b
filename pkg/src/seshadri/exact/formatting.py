"""
Text forms of exact values.

``format_number`` and ``parse_number`` are inverse to each other:

- rationals: ``13/6``, ``-2``; decimals such as ``13.7`` are read exactly
- surds: ``13 + 2/7*sqrt(6)``, ``-sqrt(2)``
- radicals: ``1/3*root(4, 3)``
- enclosures: ``[lo, hi]``

The same tokenizer and expression parser back the class and bundle
grammars of the command line.
"""

from __future__ import annotations

import logging
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from seshadri.errors import DomainError, ParseError, SeshadriError
from seshadri.exact.interval import RationalInterval
from seshadri.exact.quadratic import QuadExt, squarefree_part
from seshadri.exact.radicals import Radical

logger = logging.getLogger(__name__)

Number = Union[Fraction, QuadExt, Radical, RationalInterval]

_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:\.\d*)?|\.\d+)|(?P<name>[A-Za-z_][A-Za-z_0-9]*)|(?P<op>\S))")


@dataclass(frozen=True)
class Token:
    kind: str  # "num", "name", "op" or "end"
    text: str
    column: int


def tokenize(text: str) -> list[Token]:
    tokens: list[Token] = []
    position = 0
    while position < len(text):
        match = _TOKEN.match(text, position)
        if match is None:
            break
        kind = match.lastgroup or "op"
        tokens.append(Token(kind, match.group(kind), match.start(kind)))
        position = match.end()
    tokens.append(Token("end", "", len(text)))
    return tokens


class ExpressionParser:
    """Recursive-descent evaluator for exact number expressions."""

    def __init__(self, text: str, tokens: list[Token] | None = None, position: int = 0):
        self.text = text
        self.tokens = tokens if tokens is not None else tokenize(text)
        self.position = position

    @property
    def current(self) -> Token:
        return self.tokens[self.position]

    def error(self, message: str, token: Token | None = None) -> ParseError:
        token = token or self.current
        return ParseError(message, self.text, token.column)

    def accept(self, text: str) -> bool:
        if self.current.kind == "op" and self.current.text == text:
            self.position += 1
            return True
        return False

    def expect(self, text: str) -> Token:
        token = self.current
        if not self.accept(text):
            raise self.error(f"expected {text!r}")
        return token

    def expression(self) -> object:
        value = self.signed_product()
        while self.current.kind == "op" and self.current.text in "+-":
            operator = self.current
            self.position += 1
            rhs = self.signed_product()
            value = self._apply(operator, value, rhs)
        return value

    def signed_product(self) -> object:
        if self.accept("-"):
            token = self.tokens[self.position - 1]
            return self._apply(Token("op", "*", token.column), Fraction(-1), self.signed_product())
        self.accept("+")
        return self.product()

    def product(self, stop_names: frozenset[str] = frozenset()) -> object:
        value = self.factor()
        while True:
            token = self.current
            if token.kind == "op" and token.text in "*/":
                nxt = self.tokens[self.position + 1]
                if token.text == "*" and nxt.kind == "name" and nxt.text in stop_names:
                    return value
                self.position += 1
                value = self._apply(token, value, self.factor())
            else:
                return value

    def factor(self) -> object:
        token = self.current
        if token.kind == "num":
            self.position += 1
            return Fraction(token.text)
        if token.kind == "name" and token.text == "sqrt":
            self.position += 1
            self.expect("(")
            radicand = self._rational(self.expression(), token)
            self.expect(")")
            if radicand < 0:
                raise self.error("square root of a negative number", token)
            if radicand.denominator == 1 and squarefree_part(radicand.numerator)[0] > 1:
                logger.info("normalized sqrt(%s) to %s", radicand, QuadExt.sqrt(radicand))
            return QuadExt.sqrt(radicand)
        if token.kind == "name" and token.text == "root":
            self.position += 1
            self.expect("(")
            radicand = self._rational(self.expression(), token)
            self.expect(",")
            index_token = self.current
            if index_token.kind != "num" or not index_token.text.isdigit():
                raise self.error("root index must be a positive integer")
            self.position += 1
            self.expect(")")
            try:
                return Radical.build(radicand, int(index_token.text))
            except DomainError as exc:
                raise self.error(str(exc), token) from exc
        if self.accept("("):
            value = self.expression()
            self.expect(")")
            return value
        if token.kind == "end":
            raise self.error("unexpected end of input")
        raise self.error(f"unexpected {token.text!r}")

    def _rational(self, value: object, token: Token) -> Fraction:
        if isinstance(value, QuadExt) and value.is_rational:
            return value.p
        if isinstance(value, Fraction):
            return value
        raise self.error("radicand must be rational", token)

    def _apply(self, operator: Token, lhs: object, rhs: object) -> object:
        try:
            if operator.text == "+":
                result = lhs + rhs  # type: ignore[operator]
            elif operator.text == "-":
                result = lhs - rhs  # type: ignore[operator]
            elif operator.text == "*":
                result = lhs * rhs  # type: ignore[operator]
            else:
                result = lhs / rhs  # type: ignore[operator]
        except ZeroDivisionError as exc:
            raise self.error("division by zero", operator) from exc
        except (TypeError, SeshadriError) as exc:
            raise self.error(f"cannot evaluate exactly: {exc}", operator) from exc
        return simplify(result)


def simplify(value: object) -> object:
    if isinstance(value, QuadExt) and value.is_rational:
        return value.p
    if isinstance(value, Radical) and value.scale == 0:
        return value.offset
    return value


def parse_number(text: str) -> Number:
    """Parse an exact number or an enclosure ``[lo, hi]``."""
    stripped = text.strip()
    if stripped.startswith("["):
        if not stripped.endswith("]") or "," not in stripped:
            raise ParseError("malformed interval", text, 0)
        lo_text, hi_text = stripped[1:-1].split(",", 1)
        lo, hi = parse_number(lo_text), parse_number(hi_text)
        if not isinstance(lo, Fraction) or not isinstance(hi, Fraction):
            raise ParseError("interval endpoints must be rational", text, 0)
        try:
            return RationalInterval(lo, hi)
        except DomainError as exc:
            raise ParseError(str(exc), text, 0) from exc
    parser = ExpressionParser(text)
    value = parser.expression()
    if parser.current.kind != "end":
        raise parser.error(f"unexpected {parser.current.text!r}")
    return value  # type: ignore[return-value]


def _format_scaled(scale: Fraction, body: str) -> str:
    if scale == 1:
        return body
    if scale == -1:
        return f"-{body}"
    return f"{scale}*{body}"


def _with_offset(offset: Fraction, scale: Fraction, body: str) -> str:
    if offset == 0:
        return _format_scaled(scale, body)
    if scale < 0:
        return f"{offset} - {_format_scaled(-scale, body)}"
    return f"{offset} + {_format_scaled(scale, body)}"


def format_number(value: Number | int) -> str:
    if isinstance(value, (int, Fraction)):
        return str(Fraction(value))
    if isinstance(value, QuadExt):
        if value.is_rational:
            return str(value.p)
        return _with_offset(value.p, value.q, f"sqrt({value.d})")
    if isinstance(value, Radical):
        return _with_offset(value.offset, value.scale, f"root({value.radicand}, {value.index})")
    if isinstance(value, RationalInterval):
        return str(value)
    raise TypeError(f"cannot format {type(value).__name__}")
