"""Annotated pydantic field types carrying exact values as strings on the wire."""

from __future__ import annotations

from fractions import Fraction
from typing import Annotated, Any

from pydantic import BeforeValidator, PlainSerializer, SerializationInfo

from seshadri.errors import DomainError
from seshadri.exact.formatting import format_number, parse_number
from seshadri.exact.interval import RationalInterval
from seshadri.exact.quadratic import QuadExt
from seshadri.exact.radicals import Radical


def coerce_rational(value: Any) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DomainError("booleans are not numbers")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        # YAML reads 13.7 as a float; its shortest repr is the intended decimal
        return Fraction(repr(value))
    if isinstance(value, QuadExt) and value.is_rational:
        return value.p
    if isinstance(value, str):
        parsed = parse_number(value)
        if isinstance(parsed, Fraction):
            return parsed
    raise DomainError(f"{value!r} is not a rational number")


def coerce_quad(value: Any) -> QuadExt:
    if isinstance(value, QuadExt):
        return value
    if isinstance(value, str):
        parsed = parse_number(value)
        if isinstance(parsed, (QuadExt, Fraction)):
            return QuadExt.coerce(parsed)
        raise DomainError(f"{value!r} is not a quadratic surd")
    return QuadExt(coerce_rational(value))


def coerce_exact(value: Any) -> Fraction | QuadExt | Radical:
    if isinstance(value, (QuadExt, Radical)):
        return value
    if isinstance(value, str):
        parsed = parse_number(value)
        if isinstance(parsed, (QuadExt, Fraction, Radical)):
            return parsed
        raise DomainError(f"{value!r} is not an exact number")
    return coerce_rational(value)


def _serialize(value: Any, info: SerializationInfo) -> Any:
    # python mode hands back the exact object; only the wire form is text
    if info.mode_is_json():
        return format_number(value)
    return value


_to_text = PlainSerializer(_serialize, return_type=Any)

RationalField = Annotated[Fraction, BeforeValidator(coerce_rational), _to_text]
QuadField = Annotated[QuadExt, BeforeValidator(coerce_quad), _to_text]
ExactField = Annotated[Any, BeforeValidator(coerce_exact), _to_text]


def coerce_number(value: Any) -> Fraction | QuadExt | Radical | RationalInterval:
    if isinstance(value, RationalInterval):
        return value
    if isinstance(value, str) and value.strip().startswith("["):
        return parse_number(value)  # type: ignore[return-value]
    return coerce_exact(value)


NumberField = Annotated[Any, BeforeValidator(coerce_number), _to_text]
