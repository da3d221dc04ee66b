"""Human tables (rich) and versioned JSON documents for command results."""

from __future__ import annotations

import sys
from fractions import Fraction
from typing import Any, Iterable, Optional

from pydantic import BaseModel
from rich.console import Console
from rich.table import Table

from seshadri.exact import QuadExt, Radical, RationalInterval, format_number, to_decimal
from seshadri.models import CertificateDocument
from seshadri.products import CombinationWitness, NefCertificate, PairingWitness

_EXACT_TYPES = (Fraction, QuadExt, Radical, RationalInterval)


def jsonable(value: Any) -> Any:
    """Exact numbers become their text forms; containers are converted recursively."""
    if isinstance(value, BaseModel):
        return value.model_dump(mode="json")
    if isinstance(value, dict):
        return {str(key): jsonable(item) for key, item in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(item) for item in value]
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, _EXACT_TYPES):
        return format_number(value)
    return str(value)


class Renderer:
    """Writes results either as a rich table or as a JSON certificate document."""

    def __init__(self, output_format: str, decimals: int, command: list[str]):
        self.output_format = output_format
        self.decimals = decimals
        self.command = command
        self.console = Console(soft_wrap=True)

    @property
    def as_json(self) -> bool:
        return self.output_format == "json"

    def number(self, value: Any) -> str:
        """Exact text, followed by an advisory decimal for irrational values."""
        if value is None:
            return "-"
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, (list, tuple)):
            return ", ".join(self.number(item) for item in value)
        if not isinstance(value, _EXACT_TYPES):
            return str(value)
        text = format_number(value)
        rational = isinstance(value, Fraction) or (isinstance(value, QuadExt) and value.is_rational)
        if self.decimals and not rational:
            text += f"  (~{to_decimal(value, self.decimals)})"
        return text

    def table(self, title: str, columns: list[str], rows: Iterable[Iterable[Any]]) -> None:
        table = Table(title=title)
        for column in columns:
            table.add_column(column)
        for row in rows:
            table.add_row(*(self.number(cell) for cell in row))
        self.console.print(table)

    def document(
        self,
        payload: Optional[dict[str, Any]] = None,
        certificates: Optional[list[NefCertificate]] = None,
    ) -> None:
        document = CertificateDocument.for_certificates(
            self.command, certificates or [], jsonable(payload or {})
        )
        sys.stdout.write(document.to_json() + "\n")

    def emit(self, title: str, payload: dict[str, Any]) -> None:
        """Key/value output for a single result."""
        if self.as_json:
            self.document(payload)
            return
        self.table(title, ["quantity", "value"], ([key, value] for key, value in payload.items()))

    def listing(self, title: str, columns: list[str], rows: list[list[Any]], payload_key: str) -> None:
        if self.as_json:
            self.document({payload_key: [dict(zip(columns, row, strict=True)) for row in rows]})
            return
        self.table(title, columns, rows)

    def certificate(self, certificate: NefCertificate) -> None:
        if self.as_json:
            self.document(certificates=[certificate])
            return
        rows: list[list[Any]] = [
            ["class", str(certificate.target)],
            ["genus", str(certificate.genus)],
            ["verdict", certificate.verdict.value],
            ["generality", certificate.generality.value if certificate.generality else "-"],
            ["family", certificate.family or "-"],
        ]
        witness = certificate.witness
        if isinstance(witness, PairingWitness):
            rows.append([f"witness {witness.pairing}", witness.value])
        elif isinstance(witness, CombinationWitness):
            for term in witness.terms:
                generator = term.generator
                rows.append(
                    [f"weight {self.number(term.weight)}", f"{generator.cls}  [{generator.family.value}]"]
                )
        self.table("nef certificate", ["field", "value"], rows)
