"""3-RPR 机构几何参数。

A1 固定在原点，A2 在 x 轴上；平台角 β（B1 处）以单位圆上的精确有理点
(betax, betay) 保存，由半角参数 t = tan(β/2) 得到：
betax = (1 − t²)/(1 + t²)，betay = 2t/(1 + t²)。
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Callable, Optional

from core.errors import GeometryError
from core.numeric.rational import format_rational, rational_from_decimal, rational_sqrt_bounds

DEFAULT_BETA_TOL = Fraction(1, 10**12)


def _half_angle_point(t: Fraction) -> tuple[Fraction, Fraction]:
    den = 1 + t * t
    return (1 - t * t) / den, 2 * t / den


def beta_from_sides(
    d1: Fraction,
    d2: Fraction,
    d3: Fraction,
    orientation: int = 1,
    tol: Fraction = DEFAULT_BETA_TOL,
) -> tuple[Fraction, Fraction, Fraction]:
    """由三边求 β 的单位圆有理点。

    返回 (betax, betay, d2_reconstructed)，其中 d2_reconstructed 为
    d1² + d3² − 2·d1·d3·betax（即重建后的 d2²，无需开方），用于报告扰动。
    """
    d1, d2, d3 = Fraction(d1), Fraction(d2), Fraction(d3)
    if orientation not in (1, -1):
        raise GeometryError(f"orientation 只能为 +1 或 -1，实际为 {orientation}")
    if tol <= 0:
        raise GeometryError("tol 必须为正")
    if min(d1, d2, d3) <= 0 or d1 + d2 <= d3 or d2 + d3 <= d1 or d1 + d3 <= d2:
        raise GeometryError(f"平台三边 ({d1}, {d2}, {d3}) 不满足严格三角不等式")

    cos_beta = (d1 * d1 + d3 * d3 - d2 * d2) / (2 * d1 * d3)
    lo, hi = rational_sqrt_bounds((1 - cos_beta) / (1 + cos_beta), bits=96)
    target = (lo + hi) / 2
    max_den = 10**3
    while True:
        t = target.limit_denominator(max_den)
        betax, betay = _half_angle_point(t)
        if abs(betax - cos_beta) <= tol:
            break
        max_den *= 10
        if max_den > 10**40:
            raise GeometryError(f"无法在容差 {tol} 内有理化 β")
    betay *= orientation
    d2_reconstructed = d1 * d1 + d3 * d3 - 2 * d1 * d3 * betax
    return betax, betay, d2_reconstructed


def beta_from_degrees(degrees: Fraction, tol: Fraction = DEFAULT_BETA_TOL) -> tuple[Fraction, Fraction]:
    """由角度（度）求 β 的单位圆有理点，符号随角度。"""
    deg = Fraction(degrees)
    if not -180 < deg < 180 or deg == 0:
        raise GeometryError(f"β 必须位于 (-180, 0) ∪ (0, 180) 度，实际为 {deg}")
    rad = math.radians(float(deg))
    cos_beta, sin_beta = math.cos(rad), math.sin(rad)
    t_float = Fraction(math.tan(rad / 2))
    max_den = 10**3
    while True:
        t = t_float.limit_denominator(max_den)
        betax, betay = _half_angle_point(t)
        if abs(float(betax) - cos_beta) <= tol and abs(float(betay) - sin_beta) <= tol:
            return betax, betay
        max_den *= 10
        if max_den > 10**17:
            # 浮点 tan 本身的精度上限，直接使用其精确二进制值
            return _half_angle_point(t_float)


@dataclass(frozen=True)
class Geometry:
    """机构几何；所有量均为精确有理数。"""

    A2x: Fraction
    A3x: Fraction
    A3y: Fraction
    d1: Fraction
    d3: Fraction
    betax: Fraction
    betay: Fraction
    d2_reconstructed: Fraction
    d2: Optional[Fraction] = None
    beta_degrees: Optional[Fraction] = None
    name: str = "custom"

    def __post_init__(self) -> None:
        if self.d1 <= 0 or self.d3 <= 0:
            raise GeometryError("d1 与 d3 必须为正")
        if self.A2x <= 0:
            raise GeometryError("A2x 必须为正")
        if self.betax * self.betax + self.betay * self.betay != 1:
            raise GeometryError("(betax, betay) 必须精确位于单位圆上")
        if self.betay == 0:
            raise GeometryError("β 不能为 0 或 180 度（平台退化）")

    # 构造
    @classmethod
    def from_sides(
        cls,
        A2x: Fraction,
        A3x: Fraction,
        A3y: Fraction,
        d1: Fraction,
        d2: Fraction,
        d3: Fraction,
        beta_sign: int = 1,
        tol: Fraction = DEFAULT_BETA_TOL,
        name: str = "custom",
    ) -> "Geometry":
        betax, betay, d2_rec = beta_from_sides(d1, d2, d3, beta_sign, tol)
        return cls(
            A2x=Fraction(A2x), A3x=Fraction(A3x), A3y=Fraction(A3y),
            d1=Fraction(d1), d3=Fraction(d3), betax=betax, betay=betay,
            d2_reconstructed=d2_rec, d2=Fraction(d2), name=name,
        )

    @classmethod
    def from_angle(
        cls,
        A2x: Fraction,
        A3x: Fraction,
        A3y: Fraction,
        d1: Fraction,
        d3: Fraction,
        beta_degrees: Fraction,
        tol: Fraction = DEFAULT_BETA_TOL,
        name: str = "custom",
    ) -> "Geometry":
        betax, betay = beta_from_degrees(beta_degrees, tol)
        d1, d3 = Fraction(d1), Fraction(d3)
        return cls(
            A2x=Fraction(A2x), A3x=Fraction(A3x), A3y=Fraction(A3y),
            d1=d1, d3=d3, betax=betax, betay=betay,
            d2_reconstructed=d1 * d1 + d3 * d3 - 2 * d1 * d3 * betax,
            beta_degrees=Fraction(beta_degrees), name=name,
        )

    @classmethod
    def from_exact(
        cls,
        A2x: Fraction,
        A3x: Fraction,
        A3y: Fraction,
        d1: Fraction,
        d3: Fraction,
        betax: Fraction,
        betay: Fraction,
        name: str = "custom",
    ) -> "Geometry":
        d1, d3 = Fraction(d1), Fraction(d3)
        return cls(
            A2x=Fraction(A2x), A3x=Fraction(A3x), A3y=Fraction(A3y),
            d1=d1, d3=d3, betax=Fraction(betax), betay=Fraction(betay),
            d2_reconstructed=d1 * d1 + d3 * d3 - 2 * d1 * d3 * Fraction(betax), name=name,
        )

    # 派生量
    @property
    def beta_sign(self) -> int:
        return 1 if self.betay > 0 else -1

    @property
    def d2_effective(self) -> float:
        return math.sqrt(self.d2_reconstructed)

    @property
    def d2_perturbation(self) -> Optional[float]:
        """重建 d2 与输入 d2 的差（若输入给出 d2）。"""
        if self.d2 is None:
            return None
        return self.d2_effective - float(self.d2)

    def a3_norm_upper(self) -> Fraction:
        """‖A3‖ 的有理上界。"""
        return rational_sqrt_bounds(self.A3x * self.A3x + self.A3y * self.A3y, bits=40)[1]

    def base_points(self) -> tuple[tuple[Fraction, Fraction], ...]:
        return ((Fraction(0), Fraction(0)), (self.A2x, Fraction(0)), (self.A3x, self.A3y))

    # 变换
    def mirrored(self) -> "Geometry":
        """关于 x 轴镜像：A3y、betay 取反。"""
        return replace(
            self,
            A3y=-self.A3y,
            betay=-self.betay,
            beta_degrees=None if self.beta_degrees is None else -self.beta_degrees,
            name=f"{self.name}-mirror",
        )

    def scaled(self, factor: Fraction) -> "Geometry":
        s = Fraction(factor)
        if s <= 0:
            raise GeometryError("缩放因子必须为正")
        return replace(
            self,
            A2x=self.A2x * s,
            A3x=self.A3x * s,
            A3y=self.A3y * s,
            d1=self.d1 * s,
            d3=self.d3 * s,
            d2=None if self.d2 is None else self.d2 * s,
            d2_reconstructed=self.d2_reconstructed * s * s,
            name=f"{self.name}-x{format_rational(s)}",
        )

    def describe(self) -> dict[str, str]:
        """精确文本表示，用于 manifest 与 --dump-config。"""
        data = {
            "A2x": format_rational(self.A2x),
            "A3x": format_rational(self.A3x),
            "A3y": format_rational(self.A3y),
            "d1": format_rational(self.d1),
            "d3": format_rational(self.d3),
            "betax": format_rational(self.betax),
            "betay": format_rational(self.betay),
        }
        if self.d2 is not None:
            data["d2"] = format_rational(self.d2)
            data["beta_sign"] = str(self.beta_sign)
        if self.beta_degrees is not None:
            data["beta_degrees"] = format_rational(self.beta_degrees)
        return data


def benchmark_geometry(beta_sign: int = 1, tol: Fraction = DEFAULT_BETA_TOL) -> Geometry:
    """常用基准机构：A2 = (15.91, 0)，A3 = (0, 10)，d = (17.04, 16.54, 20.84)。"""
    dec = rational_from_decimal
    return Geometry.from_sides(
        A2x=dec("15.91"), A3x=dec("0"), A3y=dec("10"),
        d1=dec("17.04"), d2=dec("16.54"), d3=dec("20.84"),
        beta_sign=beta_sign, tol=tol, name="benchmark",
    )


def fig4_geometry(beta_sign: int = 1, tol: Fraction = DEFAULT_BETA_TOL) -> Geometry:
    """镜像三角形示例：A2x = 11，A3 = (7, 10)，d1 = d3 = 5，β = ±37°。"""
    return Geometry.from_angle(
        A2x=Fraction(11), A3x=Fraction(7), A3y=Fraction(10),
        d1=Fraction(5), d3=Fraction(5), beta_degrees=Fraction(37 * beta_sign),
        tol=tol, name="fig4+" if beta_sign > 0 else "fig4-",
    )


# 预设工厂：factory(tol) -> Geometry，tol 为 β 有理化容差
PRESETS: dict[str, Callable[..., Geometry]] = {
    "benchmark": lambda tol=DEFAULT_BETA_TOL: benchmark_geometry(1, tol),
    "benchmark-": lambda tol=DEFAULT_BETA_TOL: benchmark_geometry(-1, tol),
    "fig4+": lambda tol=DEFAULT_BETA_TOL: fig4_geometry(1, tol),
    "fig4-": lambda tol=DEFAULT_BETA_TOL: fig4_geometry(-1, tol),
}
