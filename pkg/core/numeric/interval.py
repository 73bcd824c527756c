"""外向舍入的二进制浮点区间算术。

每个端点运算先用无误差变换（TwoSum / fma）判断舍入方向，只有在结果不精确时
才向外挪动一个 ulp，因此精确可表示的结果保持精确，例如 [1,2]+[3,4] = [4,6]。
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

from core.errors import IntervalDomainError

_INF = math.inf
# 低于此量级时 fma 残差可能因下溢失真，直接外扩
_TINY = 1e-290

Number = Union[int, float, Fraction]


def _down(x: float) -> float:
    return math.nextafter(x, -_INF)


def _up(x: float) -> float:
    return math.nextafter(x, _INF)


def _two_sum_err(a: float, b: float, s: float) -> float:
    bb = s - a
    return (a - (s - bb)) + (b - bb)


def add_down(a: float, b: float) -> float:
    s = a + b
    if not math.isfinite(s):
        return s
    return _down(s) if _two_sum_err(a, b, s) < 0 else s


def add_up(a: float, b: float) -> float:
    s = a + b
    if not math.isfinite(s):
        return s
    return _up(s) if _two_sum_err(a, b, s) > 0 else s


def mul_down(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if not math.isfinite(p):
        return p
    if abs(p) < _TINY:
        return _down(p)
    return _down(p) if math.fma(a, b, -p) < 0 else p


def mul_up(a: float, b: float) -> float:
    if a == 0.0 or b == 0.0:
        return 0.0
    p = a * b
    if not math.isfinite(p):
        return p
    if abs(p) < _TINY:
        return _up(p)
    return _up(p) if math.fma(a, b, -p) > 0 else p


def div_down(a: float, b: float) -> float:
    if a == 0.0:
        return 0.0
    q = a / b
    if not math.isfinite(q):
        return q
    if abs(q) < _TINY:
        return _down(q)
    r = math.fma(q, b, -a)
    # a/b = q − r/b，r/b > 0 说明真值在 q 之下
    if r != 0 and (r > 0) == (b > 0):
        return _down(q)
    return q


def div_up(a: float, b: float) -> float:
    if a == 0.0:
        return 0.0
    q = a / b
    if not math.isfinite(q):
        return q
    if abs(q) < _TINY:
        return _up(q)
    r = math.fma(q, b, -a)
    if r != 0 and (r > 0) != (b > 0):
        return _up(q)
    return q


def _pow_down_nonneg(x: float, n: int) -> float:
    acc = 1.0
    for _ in range(n):
        acc = mul_down(acc, x)
    return acc


def _pow_up_nonneg(x: float, n: int) -> float:
    acc = 1.0
    for _ in range(n):
        acc = mul_up(acc, x)
    return acc


def rational_down(q: Fraction) -> float:
    """不超过 q 的最大浮点数（对可表示的 q 精确）。"""
    f = float(q)
    return _down(f) if Fraction(f) > q else f


def rational_up(q: Fraction) -> float:
    f = float(q)
    return _up(f) if Fraction(f) < q else f


@dataclass(frozen=True, slots=True)
class Interval:
    """闭区间 [lo, hi]，所有运算结果都包含精确实数结果。"""

    lo: float
    hi: float

    def __post_init__(self) -> None:
        if not (self.lo <= self.hi):
            raise ValueError(f"非法区间 [{self.lo}, {self.hi}]")

    # 构造
    @classmethod
    def point(cls, x: Number) -> "Interval":
        if isinstance(x, float):
            return cls(x, x)
        return cls.from_rational(Fraction(x))

    @classmethod
    def from_rational(cls, q: Fraction) -> "Interval":
        return cls(rational_down(q), rational_up(q))

    @classmethod
    def from_bounds(cls, lo: Number, hi: Number) -> "Interval":
        """由有理/浮点端点外向构造。"""
        lo_f = lo if isinstance(lo, float) else rational_down(Fraction(lo))
        hi_f = hi if isinstance(hi, float) else rational_up(Fraction(hi))
        return cls(lo_f, hi_f)

    @staticmethod
    def _coerce(other: Union["Interval", Number]) -> "Interval":
        if isinstance(other, Interval):
            return other
        return Interval.point(other)

    # 算术
    def __add__(self, other: Union["Interval", Number]) -> "Interval":
        o = self._coerce(other)
        return Interval(add_down(self.lo, o.lo), add_up(self.hi, o.hi))

    __radd__ = __add__

    def __sub__(self, other: Union["Interval", Number]) -> "Interval":
        o = self._coerce(other)
        return Interval(add_down(self.lo, -o.hi), add_up(self.hi, -o.lo))

    def __rsub__(self, other: Number) -> "Interval":
        return self._coerce(other) - self

    def __neg__(self) -> "Interval":
        return Interval(-self.hi, -self.lo)

    def __mul__(self, other: Union["Interval", Number]) -> "Interval":
        o = self._coerce(other)
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        lo = min(mul_down(a, c), mul_down(a, d), mul_down(b, c), mul_down(b, d))
        hi = max(mul_up(a, c), mul_up(a, d), mul_up(b, c), mul_up(b, d))
        return Interval(lo, hi)

    __rmul__ = __mul__

    def __truediv__(self, other: Union["Interval", Number]) -> "Interval":
        o = self._coerce(other)
        if o.lo <= 0.0 <= o.hi:
            raise IntervalDomainError(f"除数区间 [{o.lo}, {o.hi}] 包含 0")
        a, b, c, d = self.lo, self.hi, o.lo, o.hi
        lo = min(div_down(a, c), div_down(a, d), div_down(b, c), div_down(b, d))
        hi = max(div_up(a, c), div_up(a, d), div_up(b, c), div_up(b, d))
        return Interval(lo, hi)

    def __rtruediv__(self, other: Number) -> "Interval":
        return self._coerce(other) / self

    def square(self) -> "Interval":
        return self ** 2

    def __pow__(self, n: int) -> "Interval":
        if n < 0:
            raise ValueError("仅支持非负整数次幂")
        if n == 0:
            return Interval(1.0, 1.0)
        if n == 1:
            return self
        lo, hi = self.lo, self.hi
        if n % 2 == 0:
            if lo >= 0.0:
                return Interval(_pow_down_nonneg(lo, n), _pow_up_nonneg(hi, n))
            if hi <= 0.0:
                return Interval(_pow_down_nonneg(-hi, n), _pow_up_nonneg(-lo, n))
            return Interval(0.0, _pow_up_nonneg(max(-lo, hi), n))
        new_lo = _pow_down_nonneg(lo, n) if lo >= 0.0 else -_pow_up_nonneg(-lo, n)
        new_hi = _pow_up_nonneg(hi, n) if hi >= 0.0 else -_pow_down_nonneg(-hi, n)
        return Interval(new_lo, new_hi)

    # 查询
    @property
    def width(self) -> float:
        return add_up(self.hi, -self.lo)

    @property
    def mid(self) -> float:
        m = 0.5 * self.lo + 0.5 * self.hi
        return min(max(m, self.lo), self.hi)

    @property
    def mag(self) -> float:
        return max(abs(self.lo), abs(self.hi))

    def contains(self, x: Number) -> bool:
        if isinstance(x, float):
            return self.lo <= x <= self.hi
        q = Fraction(x)
        return Fraction(self.lo) <= q <= Fraction(self.hi)

    def contains_zero(self) -> bool:
        return self.lo <= 0.0 <= self.hi

    def is_subset(self, other: "Interval") -> bool:
        return other.lo <= self.lo and self.hi <= other.hi

    def is_interior_of(self, other: "Interval") -> bool:
        """严格包含于 other 的内部。"""
        return other.lo < self.lo and self.hi < other.hi

    def intersect(self, other: "Interval") -> Optional["Interval"]:
        lo = max(self.lo, other.lo)
        hi = min(self.hi, other.hi)
        if lo > hi:
            return None
        return Interval(lo, hi)

    def hull(self, other: "Interval") -> "Interval":
        return Interval(min(self.lo, other.lo), max(self.hi, other.hi))

    def bisect(self) -> tuple["Interval", "Interval"]:
        m = self.mid
        return Interval(self.lo, m), Interval(m, self.hi)

    def __repr__(self) -> str:
        return f"[{self.lo!r}, {self.hi!r}]"


def interval_sum(items: Iterable[Interval]) -> Interval:
    acc = Interval(0.0, 0.0)
    for item in items:
        acc = acc + item
    return acc
