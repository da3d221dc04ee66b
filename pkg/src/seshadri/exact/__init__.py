"""
Exact arithmetic kernel.

1. **Quadratic surds** - ``QuadExt`` over squarefree radicands, with exact
   ordering across radicands (``quad_compare_mixed``).
2. **Enclosures** - ``RationalInterval`` and ``enclose`` for values outside
   a single quadratic field.
3. **Radicals** - canonical higher roots (``Radical``), ``nth_root``,
   ``sqrt_floor`` and ``binomial``.
4. **Ordering** - ``compare``, ``floor_exact`` and decimal rendering for
   every exact kind.
5. **Text** - ``parse_number`` / ``format_number``.
"""

from seshadri.exact.fields import (
    ExactField,
    NumberField,
    QuadField,
    RationalField,
    coerce_quad,
    coerce_rational,
)
from seshadri.exact.formatting import ExpressionParser, format_number, parse_number, tokenize
from seshadri.exact.interval import DEFAULT_PRECISION, RationalInterval, enclose, mixed_sum, root_bracket
from seshadri.exact.ordering import (
    ceil_exact,
    compare,
    exact_max,
    exact_min,
    floor_exact,
    sign,
    to_decimal,
)
from seshadri.exact.quadratic import (
    Ordering,
    QuadExt,
    Rational,
    RationalLike,
    quad_compare_mixed,
    quad_sign,
    squarefree_part,
)
from seshadri.exact.radicals import ExactValue, Radical, binomial, nth_root, perfect_root, sqrt_floor

__all__ = [
    "DEFAULT_PRECISION",
    "ExactField",
    "ExactValue",
    "ExpressionParser",
    "NumberField",
    "Ordering",
    "QuadExt",
    "QuadField",
    "Radical",
    "Rational",
    "RationalField",
    "RationalInterval",
    "RationalLike",
    "binomial",
    "ceil_exact",
    "coerce_quad",
    "coerce_rational",
    "compare",
    "enclose",
    "exact_max",
    "exact_min",
    "floor_exact",
    "format_number",
    "mixed_sum",
    "nth_root",
    "parse_number",
    "perfect_root",
    "quad_compare_mixed",
    "quad_sign",
    "root_bracket",
    "sign",
    "sqrt_floor",
    "squarefree_part",
    "to_decimal",
    "tokenize",
]
