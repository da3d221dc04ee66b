"""
Families of classes ``a*f1 + b*f2 - d`` known to be nef.

- Vojta: ``a = g/(b-1) + (b-1)(g-1) + 1`` for any curve, on the arc
  ``1 < b <= 1 + sqrt(g/(g-1))`` that ends at the branch vertex
- general-point family: ``(d, 1 + g/(d-g))`` for ``d >= floor(3g/2) + 3``
  on a general curve of genus ``g >= 3``
- Kouvidakis: ``(g/floor(sqrt g) + 1)(f1 + f2) - d``

together with the ``c >= 0`` criterion rays and the fibres.
"""

from __future__ import annotations

import logging
import math
from fractions import Fraction
from typing import Any, Iterable

from seshadri.errors import DomainError, MixedRadicandError
from seshadri.exact import Ordering, QuadExt, quad_compare_mixed
from seshadri.products.certificates import (
    CombinationTerm,
    CombinationWitness,
    FamilyTag,
    Generality,
    Generator,
    NefCertificate,
    Verdict,
)
from seshadri.products.classes import (
    F1,
    F2,
    CxCClass,
    Genus,
    as_genus,
    nef_corners,
    theta_pullback,
)

logger = logging.getLogger(__name__)

DEFAULT_VOJTA_SAMPLES = 64


def vojta_threshold(g: int | Genus) -> QuadExt:
    """Smallest ``a`` for which the a-parametrised Vojta family is stated."""
    g = as_genus(g)
    return 1 + QuadExt(0, 2, g * (g - 1))


def vojta_vertex(g: int | Genus) -> tuple[QuadExt, QuadExt]:
    """Branch point where the two parametrisations of the Vojta curve meet."""
    g = as_genus(g)
    root = QuadExt(0, 1, g * (g - 1))
    return 1 + 2 * root, 1 + root / (g - 1)


def vojta_b(g: int | Genus, a: Any) -> QuadExt:
    """Smallest certified ``b`` for a given ``a >= 1 + 2 sqrt(g(g-1))``."""
    g = as_genus(g)
    a = QuadExt.coerce(a)
    threshold = vojta_threshold(g)
    if quad_compare_mixed(a, threshold) is Ordering.LESS:
        raise DomainError(f"vojta_b needs a >= 1 + 2*sqrt({g * (g - 1)}) = {threshold}, got {a}")
    discriminant = (a - 1) ** 2 - 4 * g * (g - 1)
    if not discriminant.is_rational:
        raise DomainError(f"(a-1)^2 - 4g(g-1) = {discriminant} has no exact square root here")
    try:
        return 1 + 2 * g / (a - 1 + QuadExt.sqrt(discriminant.p))
    except MixedRadicandError as exc:
        raise DomainError(f"vojta_b({g}, {a}) leaves a single quadratic field") from exc


def vojta2_a(g: int | Genus, b: Any) -> QuadExt:
    g = as_genus(g)
    b = QuadExt.coerce(b)
    if b <= 1:
        raise DomainError(f"vojta2_a needs b > 1, got {b}")
    u = b - 1
    return g / u + u * (g - 1) + 1


def on_vojta_arc(g: int, b: QuadExt) -> bool:
    """Whether ``b`` lies in the certified parameter range ``(1, b_vertex]``."""
    _, b_vertex = vojta_vertex(g)
    return quad_compare_mixed(b, 1) is Ordering.GREATER and (
        quad_compare_mixed(b, b_vertex) is not Ordering.GREATER
    )


def vojta_generator(g: int | Genus, b: Any, swapped: bool = False) -> Generator:
    g = as_genus(g)
    b = QuadExt.coerce(b)
    if not on_vojta_arc(g, b):
        raise DomainError(f"b = {b} is outside the Vojta arc (1, 1 + sqrt({g}/{g - 1})]")
    generator = Generator(
        family=FamilyTag.VOJTA,
        generality=Generality.ARBITRARY,
        cls=CxCClass(a=vojta2_a(g, b), b=b, c=QuadExt(-1)),
        parameter=b,
    )
    return generator.mirrored() if swapped else generator


def general_points_threshold(g: int | Genus) -> int:
    g = as_genus(g)
    return (3 * g) // 2 + 3


def _single_generator_certificate(g: int, generator: Generator) -> tuple[CxCClass, NefCertificate]:
    witness = CombinationWitness(terms=(CombinationTerm(generator=generator, weight=QuadExt(1)),))
    certificate = NefCertificate(
        verdict=Verdict.NEF,
        genus=g,
        target=generator.cls,
        generality=generator.generality,
        family=generator.family.value,
        witness=witness,
    )
    return generator.cls, certificate


def general_points_generator(g: int | Genus, d: int, swapped: bool = False) -> Generator:
    g = as_genus(g)
    if g < 3:
        raise DomainError(f"the general-point family needs g >= 3, got {g}")
    threshold = general_points_threshold(g)
    if d < threshold:
        raise DomainError(f"d must be >= floor(3g/2) + 3 = {threshold}, got {d}")
    generator = Generator(
        family=FamilyTag.GENERAL_POINTS,
        generality=Generality.GENERAL,
        cls=CxCClass(a=QuadExt(d), b=QuadExt(1 + Fraction(g, d - g)), c=QuadExt(-1)),
        parameter=Fraction(d),
    )
    return generator.mirrored() if swapped else generator


def thm_ii_class(g: int | Genus, d: int) -> tuple[CxCClass, NefCertificate]:
    """``d*f1 + (1 + g/(d-g))*f2 - d`` on a general curve."""
    g = as_genus(g)
    return _single_generator_certificate(g, general_points_generator(g, d))


def kouvidakis_generator(g: int | Genus) -> Generator:
    g = as_genus(g)
    coefficient = QuadExt(Fraction(g, math.isqrt(g)) + 1)
    return Generator(
        family=FamilyTag.KOUVIDAKIS,
        generality=Generality.VERY_GENERAL,
        cls=CxCClass(a=coefficient, b=coefficient, c=QuadExt(-1)),
    )


def kouvidakis_class(g: int | Genus) -> tuple[CxCClass, NefCertificate]:
    g = as_genus(g)
    return _single_generator_certificate(g, kouvidakis_generator(g))


def fiber_generators() -> list[Generator]:
    return [
        Generator(family=FamilyTag.FIBER, generality=Generality.ARBITRARY, cls=F1),
        Generator(family=FamilyTag.FIBER, generality=Generality.ARBITRARY, cls=F2),
    ]


def criterion_generators(g: int | Genus) -> list[Generator]:
    g = as_genus(g)
    return [
        Generator(family=FamilyTag.CRITERION, generality=Generality.ARBITRARY, cls=cls)
        for cls in (*nef_corners(g), theta_pullback(g))
    ]


def finite_points(g: int | Genus, max_generality: Generality) -> list[Generator]:
    """The isolated ``c = -1`` generators, without the sampled arc points.

    This always includes the arc vertex and the two tangency points of the
    line ``a + b = 2g + 2`` with the arcs.
    """
    g = as_genus(g)
    _, b_vertex = vojta_vertex(g)
    points = [
        vojta_generator(g, b_vertex),
        vojta_generator(g, b_vertex, swapped=True),
        vojta_generator(g, 2),
        vojta_generator(g, 2, swapped=True),
    ]
    if g >= 3 and max_generality.level >= Generality.GENERAL.level:
        for d in range(general_points_threshold(g), 2 * g):
            points.append(general_points_generator(g, d))
            points.append(general_points_generator(g, d, swapped=True))
    if g >= 3 and max_generality.level >= Generality.VERY_GENERAL.level:
        points.append(kouvidakis_generator(g))
    return points


def generator_set(
    g: int | Genus,
    max_generality: Generality = Generality.VERY_GENERAL,
    samples: int = DEFAULT_VOJTA_SAMPLES,
    extra_b: Iterable[Any] = (),
) -> list[Generator]:
    """Every generator of the known nef cone up to ``max_generality``.

    The Vojta arcs are sampled at ``b = 1 + j/samples`` for ``j = 1..samples``
    and at each value in ``extra_b`` (typically tangency points).
    """
    g = as_genus(g)
    if samples < 1:
        raise DomainError(f"samples must be >= 1, got {samples}")
    generators = fiber_generators() + criterion_generators(g)
    arc_parameters = [1 + Fraction(j, samples) for j in range(1, samples + 1)]
    arc_parameters += [QuadExt.coerce(b) for b in extra_b]
    for b in arc_parameters:
        generators.append(vojta_generator(g, b))
        generators.append(vojta_generator(g, b, swapped=True))
    seen = {generator.cls for generator in generators}
    for generator in finite_points(g, max_generality):
        if generator.cls not in seen:
            generators.append(generator)
            seen.add(generator.cls)
    logger.debug("generator set for g=%d up to %s has %d classes", g, max_generality.value, len(generators))
    return generators
