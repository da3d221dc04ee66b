"""Slope of the higher direct image governing nefness of ``a*f1 + b*f2 - d``."""

from __future__ import annotations

from fractions import Fraction

from seshadri.errors import DomainError
from seshadri.products.classes import Genus, as_genus


def _check(a: Fraction) -> Fraction:
    a = Fraction(a)
    if a <= 1:
        raise DomainError(f"slope formulas need a > 1, got {a}")
    return a


def pole(g: int | Genus, a: Fraction | int) -> Fraction:
    """The ``n`` where ``n*a + 1 - g - n`` vanishes."""
    g, a = as_genus(g), _check(a)
    return Fraction(g - 1) / (a - 1)


def slope_R(g: int | Genus, a: Fraction | int, n: int) -> Fraction:
    """``-n(1 + n*g/(n*a + 1 - g - n))``."""
    g, a = as_genus(g), _check(a)
    if n < 1:
        raise DomainError(f"n must be >= 1, got {n}")
    denominator = n * a + 1 - g - n
    if denominator == 0:
        raise DomainError(f"n = {n} is the pole n*a + 1 - g - n = 0 for g={g}, a={a}")
    return -n * (1 + n * g / denominator)


def slope_R_limit(g: int | Genus, a: Fraction | int) -> Fraction:
    g, a = as_genus(g), _check(a)
    return -(1 + g / (a - 1))


def slope_gap(g: int | Genus, a: Fraction | int, n: int) -> Fraction:
    """``slope_R/n`` minus its limit; shrinks monotonically past the pole."""
    return slope_R(g, a, n) / n - slope_R_limit(g, a)
