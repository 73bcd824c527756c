"""数值内核：精确有理数与外向舍入区间。"""

from core.numeric.box import Box, IntervalVector
from core.numeric.interval import Interval
from core.numeric.rational import (
    Rational,
    format_rational,
    parse_rational,
    rational_from_decimal,
)

__all__ = [
    "Box",
    "Interval",
    "IntervalVector",
    "Rational",
    "format_rational",
    "parse_rational",
    "rational_from_decimal",
]
