"""Certificate records: generators of the known nef cone and verdict witnesses."""

from __future__ import annotations

from enum import Enum
from typing import Annotated, Literal, Optional, Union

from pydantic import BaseModel, ConfigDict, Field

from seshadri.exact import NumberField, QuadExt, QuadField
from seshadri.products.classes import CxCClass, PairingWitness


class Generality(str, Enum):
    """How general the curve has to be for a statement to apply."""

    ARBITRARY = "Arbitrary"
    GENERAL = "General"
    VERY_GENERAL = "VeryGeneral"

    @property
    def level(self) -> int:
        return _LEVELS[self]

    @classmethod
    def up_to(cls, ceiling: Generality) -> list[Generality]:
        return [member for member in cls if member.level <= ceiling.level]


_LEVELS = {Generality.ARBITRARY: 0, Generality.GENERAL: 1, Generality.VERY_GENERAL: 2}


class FamilyTag(str, Enum):
    FIBER = "fiber"
    CRITERION = "criterion"
    VOJTA = "vojta"
    GENERAL_POINTS = "general-points"
    KOUVIDAKIS = "kouvidakis"


class Verdict(str, Enum):
    NEF = "Nef"
    NOT_NEF = "NotNef"
    UNKNOWN = "Unknown"


class Generator(BaseModel):
    """A class known to be nef, with the family statement that proves it.

    ``parameter`` is the b-coordinate for Vojta points and the integer ``d``
    for the general-point family; ``swapped`` marks images under the factor
    exchange.
    """

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    family: FamilyTag
    generality: Generality
    cls: CxCClass
    parameter: NumberField | None = None
    swapped: bool = False

    @property
    def point(self) -> tuple[QuadExt, QuadExt]:
        """Coordinates ``(a, b)`` of a ``c = -1`` generator."""
        return self.cls.a, self.cls.b

    def mirrored(self) -> Generator:
        return Generator(
            family=self.family,
            generality=self.generality,
            cls=self.cls.swapped(),
            parameter=self.parameter,
            swapped=not self.swapped,
        )


class CombinationTerm(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    generator: Generator
    weight: QuadField


class CombinationWitness(BaseModel):
    """Nonnegative weights whose combination of generators is the target class."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    kind: Literal["combination"] = "combination"
    terms: tuple[CombinationTerm, ...]

    def total(self) -> CxCClass:
        result = CxCClass()
        for term in self.terms:
            result = result + term.generator.cls * term.weight
        return result

    @property
    def families(self) -> list[str]:
        seen: list[str] = []
        for term in self.terms:
            if term.generator.family.value not in seen:
                seen.append(term.generator.family.value)
        return seen


Witness = Annotated[Union[PairingWitness, CombinationWitness], Field(discriminator="kind")]


class NefCertificate(BaseModel):
    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    verdict: Verdict
    genus: int = Field(ge=2)
    target: CxCClass
    generality: Generality | None = None
    family: str = ""
    witness: Optional[Witness] = None
