"""由几何构造约束方程组、奇异方程组与尖点方程组。

变量：位姿 X = (B1x, B1y, tx, ty)，杆长 r1, r2, r3（只以平方出现）。
"""

from __future__ import annotations

import logging
from fractions import Fraction
from functools import lru_cache

from core.model.geometry import Geometry
from core.poly.poly import STANDARD_VARIABLES, Poly
from core.poly.system import PolySystem

logger = logging.getLogger(__name__)

POSE_VARIABLES: tuple[str, ...] = ("B1x", "B1y", "tx", "ty")
JOINT_VARIABLES: tuple[str, ...] = ("r1", "r2", "r3")
CUSP_UNKNOWNS: tuple[str, ...] = POSE_VARIABLES + ("r2", "r3")

CONSTRAINT_LABELS = ("E1", "E2", "E3", "E4")
SINGULAR_LABELS = CONSTRAINT_LABELS + ("J",)
CUSP_LABELS = SINGULAR_LABELS + ("M2", "M3", "M4", "M5")


def _v(name: str) -> Poly:
    return Poly.var(name, STANDARD_VARIABLES)


@lru_cache(maxsize=32)
def constraint_polys(g: Geometry) -> tuple[Poly, Poly, Poly, Poly]:
    """E1..E4，变量表为全部七个标准变量。"""
    B1x, B1y, tx, ty = (_v(n) for n in POSE_VARIABLES)
    r1, r2, r3 = (_v(n) for n in JOINT_VARIABLES)
    e1 = B1x**2 + B1y**2 - r1**2
    e2 = (B1x + tx * g.d1 - g.A2x) ** 2 + (B1y + ty * g.d1) ** 2 - r2**2
    b3x = B1x + (tx * g.betax - ty * g.betay) * g.d3 - g.A3x
    b3y = B1y + (tx * g.betay + ty * g.betax) * g.d3 - g.A3y
    e3 = b3x**2 + b3y**2 - r3**2
    e4 = tx**2 + ty**2 - 1
    return e1, e2, e3, e4


def build_constraints(g: Geometry) -> PolySystem:
    return PolySystem(
        equations=constraint_polys(g),
        unknowns=POSE_VARIABLES,
        parameters=JOINT_VARIABLES,
        labels=CONSTRAINT_LABELS,
        name=f"constraints[{g.name}]",
    )


@lru_cache(maxsize=32)
def singular_poly(g: Geometry) -> Poly:
    """J = det(∂E/∂X)。"""
    return build_constraints(g).jacobian(POSE_VARIABLES).det()


def build_singular_system(g: Geometry) -> PolySystem:
    return PolySystem(
        equations=constraint_polys(g) + (singular_poly(g),),
        unknowns=POSE_VARIABLES,
        parameters=JOINT_VARIABLES,
        labels=SINGULAR_LABELS,
        name=f"singular[{g.name}]",
    )


@lru_cache(maxsize=32)
def cusp_minors(g: Geometry) -> tuple[Poly, ...]:
    """(E1..E4, J) 对 X 的 5×4 雅可比矩阵的全部 4 阶子式，按行子集字典序。

    第一个子式不含 ∂J/∂X 行，恒等于 J；其余四个即 M2..M5。
    """
    minors = build_singular_system(g).jacobian(POSE_VARIABLES).minors(4)
    logger.debug("尖点子式次数: %s", [m.total_degree() for m in minors])
    return tuple(minors)


def build_cusp_system(g: Geometry) -> PolySystem:
    """9 个方程：E1..E4, J, M2..M5；未知量 (X, r2, r3)，参数 r1。"""
    minors = cusp_minors(g)
    return PolySystem(
        equations=constraint_polys(g) + (singular_poly(g),) + minors[1:],
        unknowns=CUSP_UNKNOWNS,
        parameters=("r1",),
        labels=CUSP_LABELS,
        name=f"cusp[{g.name}]",
    )


def build_dk_system(g: Geometry, r1: Fraction, r2: Fraction, r3: Fraction) -> PolySystem:
    """固定杆长后的正运动学方程组（4×4 方阵）。"""
    return build_constraints(g).substitute({"r1": r1, "r2": r2, "r3": r3})


def build_singular_section_system(g: Geometry, r1: Fraction, r2: Fraction) -> PolySystem:
    """奇异曲线与竖线 ρ2 = r2 的交：(E1..E4, J) 在 (X, r3) 上的方阵。"""
    values = {"r1": Fraction(r1), "r2": Fraction(r2)}
    equations = tuple(eq.substitute_many(values) for eq in build_singular_system(g).equations)
    return PolySystem(
        equations=equations,
        unknowns=POSE_VARIABLES + ("r3",),
        labels=SINGULAR_LABELS,
        name=f"singular-section[{g.name}]",
    )
