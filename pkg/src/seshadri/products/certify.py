"""
Exact nef certification on C x C.

A class ``D = a*f1 + b*f2 + c*d`` is decided in this order:

1. a failed pairing against ``f1``, ``f2``, ``d`` or ``D`` itself makes it NotNef;
2. for ``c >= 0`` the criterion ``a, b >= 0``, ``a + b >= c(2g-2)`` decides;
3. for ``c < 0`` the normalised point ``(a, b)/(-c)`` is tested for membership
   in the convex hull of the known generators plus the positive quadrant,
   one generality level at a time so the weakest hypothesis is reported;
4. a 3-dimensional cone solve over the rational generators is the last resort.

The hull test is exact. Its lower-left boundary consists of the generator
points, the segments between them, the two Vojta arcs and the tangents from
the points to the arcs, and every one of those pieces is checked in closed
form over a quadratic field.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from typing import Optional

from sympy import Matrix, Rational as SymRational

from seshadri.errors import MixedRadicandError
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
    DIAGONAL,
    F1,
    F2,
    CxCClass,
    Genus,
    PairingWitness,
    as_genus,
    intersect,
    necessary_conditions,
)
from seshadri.products.families import (
    criterion_generators,
    fiber_generators,
    finite_points,
    general_points_threshold,
    kouvidakis_generator,
    on_vojta_arc,
    vojta2_a,
    vojta_generator,
    vojta_vertex,
)
from seshadri.products.tangency import tangent_lines

logger = logging.getLogger(__name__)

Terms = list[tuple[Generator, QuadExt]]


def _less_equal(x: QuadExt, y: QuadExt) -> bool:
    return quad_compare_mixed(x, y) is not Ordering.GREATER


def _fibers() -> tuple[Generator, Generator]:
    first, second = fiber_generators()
    return first, second


def _dominated(point: tuple[QuadExt, QuadExt], target: tuple[QuadExt, QuadExt]) -> Optional[tuple[QuadExt, QuadExt]]:
    """Slack ``target - point`` when it is nonnegative in both coordinates."""
    slack_a, slack_b = target[0] - point[0], target[1] - point[1]
    if slack_a.sign() < 0 or slack_b.sign() < 0:
        return None
    return slack_a, slack_b


def _with_slack(terms: Terms, slack: tuple[QuadExt, QuadExt]) -> Terms:
    f1, f2 = _fibers()
    result = [(generator, weight) for generator, weight in terms if weight != 0]
    if slack[0] != 0:
        result.append((f1, slack[0]))
    if slack[1] != 0:
        result.append((f2, slack[1]))
    return result


def _segment_weight(
    first: tuple[QuadExt, QuadExt],
    second: tuple[QuadExt, QuadExt],
    target: tuple[QuadExt, QuadExt],
) -> Optional[QuadExt]:
    """Some ``lam`` in [0, 1] with ``lam*first + (1-lam)*second <= target``."""
    low, high = QuadExt(0), QuadExt(1)
    for x, y, q in zip(first, second, target, strict=True):
        step, room = x - y, q - y
        direction = step.sign()
        if direction == 0:
            if room.sign() < 0:
                return None
            continue
        bound = room / step
        if direction > 0 and quad_compare_mixed(bound, high) is Ordering.LESS:
            high = bound
        elif direction < 0 and quad_compare_mixed(bound, low) is Ordering.GREATER:
            low = bound
    return low if _less_equal(low, high) else None


def _combine_pair(
    first: Generator, second: Generator, target: tuple[QuadExt, QuadExt]
) -> Optional[Terms]:
    lam = _segment_weight(first.point, second.point, target)
    if lam is None:
        return None
    point = tuple(lam * x + (1 - lam) * y for x, y in zip(first.point, second.point, strict=True))
    slack = _dominated(point, target)  # type: ignore[arg-type]
    if slack is None:
        return None
    return _with_slack([(first, lam), (second, 1 - lam)], slack)


@dataclass
class NefConeModel:
    """The certified part of the nef cone for one genus up to one generality level."""

    genus: int
    max_generality: Generality
    points: list[Generator] = field(default_factory=list)
    rational_generators: list[Generator] = field(default_factory=list)
    _inverses: list[tuple[tuple[Generator, ...], list[list[Fraction]]]] = field(default_factory=list)
    _touches: dict[CxCClass, list[Generator]] = field(default_factory=dict)
    b_vertex: QuadExt = field(init=False)

    def __post_init__(self) -> None:
        g = self.genus
        self.points = finite_points(g, self.max_generality)
        self.b_vertex = vojta_vertex(g)[1]
        self.rational_generators = fiber_generators() + criterion_generators(g) + [
            point for point in self.points if point.cls.is_rational
        ]
        self._inverses = self._invert_triples()

    # --- planar hull test --------------------------------------------------

    def _arc_point(self, target: tuple[QuadExt, QuadExt], swapped: bool) -> Optional[Terms]:
        qa, qb = (target[1], target[0]) if swapped else target
        if quad_compare_mixed(qb, 1) is not Ordering.GREATER:
            return None
        b = qb if _less_equal(qb, self.b_vertex) else self.b_vertex
        if not _less_equal(vojta2_a(self.genus, b), qa):
            return None
        generator = vojta_generator(self.genus, b, swapped=swapped)
        slack = _dominated(generator.point, target)
        return None if slack is None else _with_slack([(generator, QuadExt(1))], slack)

    def _tangent_generators(self, point: Generator) -> list[Generator]:
        if not point.cls.is_rational:
            return []
        cached = self._touches.get(point.cls)
        if cached is not None:
            return cached
        a, b = point.point
        touches = []
        for swapped, source in ((False, (a, b)), (True, (b, a))):
            for line in tangent_lines(self.genus, source, self.b_vertex):
                touches.append(vojta_generator(self.genus, line.touch_b, swapped=swapped))
        self._touches[point.cls] = touches
        return touches

    def membership(
        self, target: tuple[QuadExt, QuadExt], level: Generality
    ) -> Optional[Terms]:
        """Witness terms placing ``target`` in the hull using a generator of ``level``.

        Candidates built only from lower levels are skipped; callers walk
        the levels upwards.
        """
        fresh = [p for p in self.points if p.generality is level]
        attempts = []
        for point in fresh:
            attempts.append(lambda point=point: self._single(point, target))
        if level is Generality.ARBITRARY:
            attempts.append(lambda: self._arc_point(target, swapped=False))
            attempts.append(lambda: self._arc_point(target, swapped=True))
        for first, second in itertools.combinations(self.points, 2):
            if level.level == max(first.generality.level, second.generality.level):
                attempts.append(lambda pair=(first, second): _combine_pair(*pair, target))
        for point in fresh:
            for touch in self._tangent_generators(point):
                attempts.append(lambda pair=(point, touch): _combine_pair(*pair, target))
        for attempt in attempts:
            try:
                terms = attempt()
            except MixedRadicandError:
                continue
            if terms is not None:
                return terms
        return None

    @staticmethod
    def _single(point: Generator, target: tuple[QuadExt, QuadExt]) -> Optional[Terms]:
        slack = _dominated(point.point, target)
        return None if slack is None else _with_slack([(point, QuadExt(1))], slack)

    # --- cone fallback -----------------------------------------------------

    def _invert_triples(self) -> list[tuple[tuple[Generator, ...], list[list[Fraction]]]]:
        anchors = {FamilyTag.FIBER, FamilyTag.CRITERION}
        inverses = []
        for triple in itertools.combinations(self.rational_generators, 3):
            if not any(generator.family in anchors for generator in triple):
                continue
            matrix = Matrix(
                [[SymRational(x.p.numerator, x.p.denominator) for x in gen.cls.coefficients] for gen in triple]
            ).T
            if matrix.det() == 0:
                continue
            inverse = matrix.inv()
            inverses.append(
                (
                    triple,
                    [[Fraction(int(entry.p), int(entry.q)) for entry in inverse.row(i)] for i in range(3)],
                )
            )
        return inverses

    def cone_solve(self, cls: CxCClass) -> Optional[Terms]:
        """Nonnegative combination of three rational generators equal to ``cls``."""
        if not cls.is_rational:
            return None
        vector = [x.p for x in cls.coefficients]
        for triple, inverse in self._inverses:
            weights = [sum(row[j] * vector[j] for j in range(3)) for row in inverse]
            if all(weight >= 0 for weight in weights):
                return [(gen, QuadExt(w)) for gen, w in zip(triple, weights, strict=True) if w != 0]
        return None


@lru_cache(maxsize=64)
def cone_model(g: int, max_generality: Generality) -> NefConeModel:
    return NefConeModel(genus=g, max_generality=max_generality)


def _certificate(
    verdict: Verdict,
    g: int,
    cls: CxCClass,
    terms: Optional[Terms] = None,
    family: str = "",
    pairing: Optional[PairingWitness] = None,
) -> NefCertificate:
    if terms is None:
        return NefCertificate(verdict=verdict, genus=g, target=cls, family=family, witness=pairing)
    witness = CombinationWitness(
        terms=tuple(CombinationTerm(generator=gen, weight=weight) for gen, weight in terms)
    )
    generality = max((gen.generality for gen, _ in terms), key=lambda level: level.level)
    return NefCertificate(
        verdict=verdict,
        genus=g,
        target=cls,
        generality=generality,
        family=family or "+".join(witness.families),
        witness=witness,
    )


def _criterion_terms(cls: CxCClass, g: int) -> Optional[Terms]:
    a, b, c = cls.coefficients
    if a.sign() < 0 or b.sign() < 0 or c.sign() < 0:
        return None
    span = 2 * g - 2
    if quad_compare_mixed(a + b, c * span) is Ordering.LESS:
        return None
    f1, f2 = _fibers()
    corner_first, corner_second, _ = criterion_generators(g)
    if c == 0:
        return [(gen, w) for gen, w in ((f1, a), (f2, b)) if w != 0]
    first_weight = c if _less_equal(c, a / span) else a / span
    second_weight = c - first_weight
    terms = [
        (corner_first, first_weight),
        (corner_second, second_weight),
        (f1, a - first_weight * span),
        (f2, b - second_weight * span),
    ]
    return [(gen, w) for gen, w in terms if w != 0]


def certify_nef(
    cls: CxCClass,
    g: int | Genus,
    max_generality: Generality = Generality.VERY_GENERAL,
) -> NefCertificate:
    """Decide nefness of ``cls`` using statements valid up to ``max_generality``."""
    g = as_genus(g)
    failure = necessary_conditions(cls, g)
    if failure is not None:
        return _certificate(Verdict.NOT_NEF, g, cls, family="necessary-conditions", pairing=failure)

    model = cone_model(g, max_generality)
    c_sign = cls.c.sign()
    try:
        if c_sign >= 0:
            terms = _criterion_terms(cls, g)
            if terms is not None:
                logger.debug("%s is nef by the c >= 0 criterion", cls)
                return _certificate(Verdict.NEF, g, cls, terms, family=FamilyTag.CRITERION.value)
        else:
            scale = -cls.c
            target = (cls.a / scale, cls.b / scale)
            for level in Generality.up_to(max_generality):
                terms = model.membership(target, level)
                if terms is not None:
                    logger.debug("%s certified at level %s", cls, level.value)
                    scaled = [(gen, weight * scale) for gen, weight in terms]
                    return _certificate(Verdict.NEF, g, cls, scaled)
    except MixedRadicandError:
        logger.debug("%s mixes radicands with the generator fields", cls)

    terms = model.cone_solve(cls)
    if terms is not None:
        return _certificate(Verdict.NEF, g, cls, terms)
    return _certificate(Verdict.UNKNOWN, g, cls)


# --- independent verification ------------------------------------------------


def _pairing_curve(label: str, target: CxCClass) -> Optional[CxCClass]:
    return {"D.f1": F1, "D.f2": F2, "D.d": DIAGONAL, "D^2": target}.get(label)


def _generator_is_valid(generator: Generator, g: int) -> bool:
    cls = generator.cls.swapped() if generator.swapped else generator.cls
    family = generator.family
    if family is FamilyTag.FIBER:
        return generator.cls in (F1, F2) and not generator.swapped
    if family is FamilyTag.CRITERION:
        return _criterion_terms(generator.cls, g) is not None
    if family is FamilyTag.VOJTA:
        if not isinstance(generator.parameter, (QuadExt, Fraction)):
            return False
        b = QuadExt.coerce(generator.parameter)
        return (
            on_vojta_arc(g, b)
            and cls == CxCClass(a=vojta2_a(g, b), b=b, c=QuadExt(-1))
        )
    if family is FamilyTag.GENERAL_POINTS:
        d = generator.parameter
        if not isinstance(d, Fraction) or d.denominator != 1 or g < 3:
            return False
        if d < general_points_threshold(g) or generator.generality is Generality.ARBITRARY:
            return False
        return cls == CxCClass(a=QuadExt(d), b=QuadExt(1 + g / (d - g)), c=QuadExt(-1))
    if family is FamilyTag.KOUVIDAKIS:
        expected = kouvidakis_generator(g)
        return cls == expected.cls and generator.generality is Generality.VERY_GENERAL
    return False


def verify_certificate(certificate: NefCertificate, g: int | Genus | None = None) -> bool:
    """Re-check a certificate by exact arithmetic, independently of how it was found."""
    g = as_genus(certificate.genus if g is None else g)
    witness = certificate.witness
    target = certificate.target
    if certificate.verdict is Verdict.UNKNOWN:
        return witness is None
    if certificate.verdict is Verdict.NOT_NEF:
        if not isinstance(witness, PairingWitness):
            return False
        curve = _pairing_curve(witness.pairing, target)
        if curve is None or curve != witness.against:
            return False
        value = intersect(target, curve, g)
        if not isinstance(value, QuadExt):
            return value.certainly_negative()
        return value == witness.value and value.sign() < 0
    if not isinstance(witness, CombinationWitness) or certificate.generality is None:
        return False
    if necessary_conditions(target, g) is not None:
        logger.debug("nef target %s fails a necessary condition", target)
        return False
    for term in witness.terms:
        if term.weight.sign() < 0:
            logger.debug("negative weight %s", term.weight)
            return False
        if term.generator.generality.level > certificate.generality.level:
            return False
        if not _generator_is_valid(term.generator, g):
            logger.debug("generator %s fails its family test", term.generator.cls)
            return False
    try:
        return witness.total() == target
    except MixedRadicandError:
        return False
