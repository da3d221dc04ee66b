"""
Tangent lines from a point to the Vojta curve ``a(b) = g/(b-1) + (b-1)(g-1) + 1``.

With ``u = b - 1`` the touch parameter of a tangent through ``(a0, b0)``
solves ``A*u^2 + 2g*u + g(1 - b0) = 0`` with ``A = 1 - a0 + (g-1)(b0-1)``.
Roots live in a single quadratic field, so touch points, slopes and the
line itself are exact.
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache
from typing import Any

from pydantic import BaseModel, ConfigDict

from seshadri.errors import DomainError
from seshadri.exact import Ordering, QuadExt, QuadField, quad_compare_mixed
from seshadri.products.classes import Genus, as_genus
from seshadri.products.families import vojta2_a, vojta_vertex

logger = logging.getLogger(__name__)


class TangentLine(BaseModel):
    """The line ``a = a0 + da_db * (b - b0)`` touching the curve at ``(touch_a, touch_b)``."""

    model_config = ConfigDict(frozen=True, arbitrary_types_allowed=True)

    genus: int
    point_a: QuadField
    point_b: QuadField
    touch_a: QuadField
    touch_b: QuadField
    da_db: QuadField
    discriminant: QuadField

    @property
    def db_da(self) -> QuadExt:
        if self.da_db == 0:
            raise DomainError("horizontal tangent in the (a, b) chart")
        return 1 / self.da_db

    def a_at(self, b: Any) -> QuadExt:
        return self.point_a + self.da_db * (QuadExt.coerce(b) - self.point_b)

    @property
    def intercept(self) -> QuadExt:
        """``alpha`` in ``a = alpha + m*b``."""
        return self.point_a - self.da_db * self.point_b


def vojta2_slope(g: int | Genus, b: Any) -> QuadExt:
    """``da/db`` along the Vojta curve."""
    g = as_genus(g)
    u = QuadExt.coerce(b) - 1
    return -g / (u * u) + (g - 1)


@lru_cache(maxsize=1024)
def _touch_parameters(g: int, a0: Fraction, b0: Fraction) -> tuple[tuple[QuadExt, ...], Fraction]:
    leading = 1 - a0 + (g - 1) * (b0 - 1)
    if leading == 0:
        return (QuadExt((b0 - 1) / 2),), Fraction(0)
    discriminant = 4 * g * g - 4 * leading * g * (1 - b0)
    if discriminant < 0:
        return (), discriminant
    root = QuadExt.sqrt(discriminant)
    roots = {(-2 * g + root) / (2 * leading), (-2 * g - root) / (2 * leading)}
    return tuple(roots), discriminant


def tangent_lines(
    g: int | Genus,
    point: tuple[Any, Any],
    b_max: Any | None = None,
) -> list[TangentLine]:
    """All tangents from a rational point touching the curve at ``1 < b <= b_max``.

    ``b_max`` defaults to the arc vertex ``1 + sqrt(g/(g-1))``.
    """
    g = as_genus(g)
    a0, b0 = QuadExt.coerce(point[0]), QuadExt.coerce(point[1])
    if not (a0.is_rational and b0.is_rational):
        raise DomainError("tangent lines are computed from rational points only")
    upper = vojta_vertex(g)[1] if b_max is None else QuadExt.coerce(b_max)
    parameters, discriminant = _touch_parameters(g, a0.p, b0.p)
    lines = []
    for u in sorted(parameters, key=float):
        touch_b = 1 + u
        if u.sign() <= 0 or quad_compare_mixed(touch_b, upper) is Ordering.GREATER:
            continue
        lines.append(
            TangentLine(
                genus=g,
                point_a=a0,
                point_b=b0,
                touch_a=vojta2_a(g, touch_b),
                touch_b=touch_b,
                da_db=vojta2_slope(g, touch_b),
                discriminant=QuadExt(discriminant),
            )
        )
    return lines


def tangent_from_point(
    g: int | Genus,
    point: tuple[Any, Any],
    b_max: Any = 2,
) -> TangentLine:
    """The tangent from ``point`` touching the curve on ``(1, b_max]``.

    When two tangents qualify, the one touching at the larger ``b`` wins.
    """
    lines = tangent_lines(g, point, b_max)
    if not lines:
        raise DomainError(f"no tangent from {point[0]}, {point[1]} touches the curve on (1, {b_max}]")
    return lines[-1]


def line_curve_discriminant(g: int | Genus, line: TangentLine | tuple[Any, Any]) -> QuadExt:
    """Discriminant in ``u`` of the line ``a = alpha + m*b`` meeting the Vojta curve.

    ``line`` is a :class:`TangentLine` or a pair ``(alpha, m)``. Zero means
    the line is tangent.
    """
    g = as_genus(g)
    if isinstance(line, TangentLine):
        alpha, m = line.intercept, line.da_db
    else:
        alpha, m = QuadExt.coerce(line[0]), QuadExt.coerce(line[1])
    # g/u + (g-1)u + 1 = alpha + m(u + 1)  <=>  (g-1-m)u^2 + (1-alpha-m)u + g = 0
    linear = 1 - alpha - m
    return linear * linear - 4 * g * (g - 1 - m)
