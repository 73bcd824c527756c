"""
Unit tests for core/numeric (精确有理数与外向舍入区间)

- 十进制文本的精确读入与输出
- 区间四则运算的包含性与单调性
- 盒子的二分、相交与排序键
"""

import random
from fractions import Fraction

import pytest

from core.errors import DecimalParseError, IntervalDomainError
from core.numeric.box import Box
from core.numeric.interval import Interval
from core.numeric.rational import (
    format_rational,
    parse_rational,
    rational_from_decimal,
    rational_sqrt_bounds,
)


class TestRationalFromDecimal:
    """十进制文本读入"""

    @pytest.mark.parametrize(
        "text, expected",
        [
            ("15.91", Fraction(1591, 100)),
            ("0", Fraction(0)),
            ("-0.5", Fraction(-1, 2)),
            (".537", Fraction(537, 1000)),
            ("+20.84", Fraction(2084, 100)),
        ],
    )
    def test_exact_values(self, text, expected):
        """应精确读入有限十进制"""
        assert rational_from_decimal(text) == expected

    @pytest.mark.parametrize("text", ["", "1e-3", "abc", "1/2", "nan", "1.2.3", "--1"])
    def test_malformed_text_raises(self, text):
        """指数记法、分数与非数字应报错"""
        with pytest.raises(DecimalParseError):
            rational_from_decimal(text)

    def test_non_string_raises(self):
        """浮点输入应报错，避免二进制近似"""
        with pytest.raises(DecimalParseError):
            rational_from_decimal(0.1)  # type: ignore[arg-type]

    def test_parse_rational_accepts_ratio(self):
        """p/q 形式可读回"""
        assert parse_rational("4510956/7102272") == Fraction(4510956, 7102272)
        with pytest.raises(DecimalParseError):
            parse_rational("1/0")

    def test_format_round_trip(self):
        """format_rational 的输出可无损读回"""
        for q in (Fraction(1591, 100), Fraction(-1, 3), Fraction(7), Fraction(-1, 8)):
            assert parse_rational(format_rational(q)) == q
        assert format_rational(Fraction(1591, 100)) == "15.91"
        assert format_rational(Fraction(-1, 8)) == "-0.125"

    def test_field_axioms_spot_check(self, rng):
        """(p + q)·r = p·r + q·r 精确成立"""
        for _ in range(200):
            p, q, r = (Fraction(rng.randint(-999, 999), rng.randint(1, 999)) for _ in range(3))
            assert (p + q) * r == p * r + q * r

    def test_sqrt_bounds_enclose(self):
        """平方根上下界包住精确值"""
        lo, hi = rational_sqrt_bounds(Fraction(2))
        assert lo * lo <= 2 <= hi * hi
        assert hi - lo == Fraction(1, 2**60)


class TestInterval:
    """区间运算"""

    def test_add(self):
        assert Interval(1.0, 2.0) + Interval(3.0, 4.0) == Interval(4.0, 6.0)

    def test_square_containing_zero(self):
        """[−1, 2]² = [0, 4]"""
        assert Interval(-1.0, 2.0) ** 2 == Interval(0.0, 4.0)

    def test_division_by_zero_interval_raises(self):
        with pytest.raises(IntervalDomainError):
            Interval(1.0, 1.0) / Interval(0.0, 1.0)

    def test_invalid_bounds_raise(self):
        with pytest.raises(ValueError):
            Interval(2.0, 1.0)

    def test_outward_rounding_of_decimal(self):
        """0.1 不可精确表示，区间应严格包住它"""
        iv = Interval.from_rational(Fraction(1, 10))
        assert iv.lo < iv.hi
        assert iv.contains(Fraction(1, 10))

    def test_point_consistency(self, rng):
        """随机有理点的精确运算结果落在区间结果内"""
        for _ in range(2000):
            a_lo, b_lo = rng.uniform(-10, 10), rng.uniform(0.5, 10)
            a = Interval(a_lo, a_lo + rng.uniform(0, 5))
            b = Interval(b_lo, b_lo + rng.uniform(0, 5))
            p = Fraction(a.lo) + (Fraction(a.hi) - Fraction(a.lo)) * Fraction(rng.randint(0, 100), 100)
            q = Fraction(b.lo) + (Fraction(b.hi) - Fraction(b.lo)) * Fraction(rng.randint(0, 100), 100)
            assert (a + b).contains(p + q)
            assert (a - b).contains(p - q)
            assert (a * b).contains(p * q)
            assert (a / b).contains(p / q)
            assert (a ** 3).contains(p ** 3)
            assert (-a).contains(-p)

    def test_containment_monotonicity(self):
        """a ⊆ a′、b ⊆ b′ 时 op(a, b) ⊆ op(a′, b′)"""
        gen = random.Random(7)
        ops = [
            lambda x, y: x + y,
            lambda x, y: x - y,
            lambda x, y: x * y,
            lambda x, y: x / y,
            lambda x, y: x.square(),
        ]
        for _ in range(10_000):
            lo = gen.uniform(-50, 50)
            outer_a = Interval(lo, lo + gen.uniform(0, 20))
            blo, bw = gen.uniform(0.1, 50), gen.uniform(0, 20)
            outer_b = Interval(blo, blo + bw) if gen.random() < 0.5 else Interval(-blo - bw, -blo)
            inner_a = Interval(*sorted((gen.uniform(outer_a.lo, outer_a.hi), gen.uniform(outer_a.lo, outer_a.hi))))
            inner_b = Interval(*sorted((gen.uniform(outer_b.lo, outer_b.hi), gen.uniform(outer_b.lo, outer_b.hi))))
            op = gen.choice(ops)
            assert op(inner_a, inner_b).is_subset(op(outer_a, outer_b))

    def test_intersect_and_hull(self):
        a, b = Interval(0.0, 2.0), Interval(1.0, 3.0)
        assert a.intersect(b) == Interval(1.0, 2.0)
        assert a.hull(b) == Interval(0.0, 3.0)
        assert Interval(0.0, 1.0).intersect(Interval(2.0, 3.0)) is None

    def test_interior(self):
        assert Interval(0.25, 0.75).is_interior_of(Interval(0.0, 1.0))
        assert not Interval(0.0, 0.75).is_interior_of(Interval(0.0, 1.0))


class TestBox:
    """盒子操作"""

    def test_from_bounds_and_lookup(self):
        box = Box.from_bounds({"x": (0, 1), "y": (Fraction(-1, 2), 2)})
        assert box.names == ("x", "y")
        assert box["y"].lo == -0.5
        assert box.width == 2.5

    def test_bisect_covers_parent(self):
        box = Box.from_bounds({"x": (0, 4), "y": (0, 1)})
        left, right = box.bisect(0)
        assert left["x"].hi == right["x"].lo == 2.0
        assert left.hull(right) == box

    def test_disjoint_and_sort_key(self):
        a = Box.from_bounds({"x": (0, 1)})
        b = Box.from_bounds({"x": (2, 3)})
        assert a.is_disjoint(b)
        assert sorted([b, a], key=Box.sort_key) == [a, b]

    def test_normalized_widths(self):
        box = Box.from_bounds({"x": (0, 1), "y": (0, 10)})
        assert box.normalized_widths((2.0, 10.0)) == (0.5, 1.0)
        assert box.normalized_widths((0.0, 10.0))[0] == 0.0
