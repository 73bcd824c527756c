"""单个 ρ1 切片上的尖点构型与奇异曲线截面。"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Optional

from core.atlas.kinematics import configuration_from_root, direct_kinematics, search_box_for
from core.model.geometry import Geometry
from core.model.kinematics import Configuration
from core.model.systems import (
    CUSP_UNKNOWNS,
    POSE_VARIABLES,
    build_cusp_system,
    build_singular_section_system,
    build_singular_system,
)
from core.numeric.box import Box
from core.numeric.interval import Interval
from core.poly.system import PolySystem
from core.solver.isolate import isolate_roots, solve_overdetermined
from core.solver.prune import evaluate_equations
from core.solver.report import SolveReport, SolverOptions, search_box

logger = logging.getLogger(__name__)

@dataclass(frozen=True)
class SliceResult:
    r1: Fraction
    cusps: tuple[Configuration, ...]
    report: SolveReport
    singular_polylines: tuple[tuple[tuple[float, float], ...], ...] = field(default=())

    @property
    def count(self) -> int:
        return len(self.cusps)

    @property
    def complete(self) -> bool:
        return self.report.complete


def cusp_slice(g: Geometry, r1: Fraction, options: Optional[SolverOptions] = None) -> SliceResult:
    """ρ1 = r1 切片上的全部尖点构型（超定 9 方程组的认证根）。"""
    r1 = Fraction(r1)
    system = build_cusp_system(g).substitute({"r1": r1})
    report = solve_overdetermined(system, search_box_for(g, r1), options)
    cusps = tuple(configuration_from_root(root, r1) for root in report.roots)
    logger.info("r1=%s：%d 个尖点，%d 个未解决盒", float(r1), len(cusps), len(report.unresolved))
    return SliceResult(r1=r1, cusps=cusps, report=report)


def singular_residuals(g: Geometry, root_box: Box, r1: Fraction) -> list[Interval]:
    """奇异方程组 (E1..E4, J) 在尖点盒上的残差区间。"""
    singular = build_singular_system(g).substitute({"r1": Fraction(r1)})
    system = PolySystem(
        equations=singular.equations,
        unknowns=CUSP_UNKNOWNS,
        labels=singular.labels,
        name=singular.name,
    )
    return evaluate_equations(system.compile(), root_box.intervals)


def singular_section(
    g: Geometry, r1: Fraction, r2: Fraction, options: Optional[SolverOptions] = None
) -> SolveReport:
    """奇异曲线在竖线 ρ2 = r2 上的认证交点（未知量 X 与 r3）。"""
    r1, r2 = Fraction(r1), Fraction(r2)
    pose = search_box_for(g, r1)
    bounds = {name: (pose[name].lo, pose[name].hi) for name in POSE_VARIABLES}
    bounds["r3"] = (Fraction(0), r1 + g.d3 + g.a3_norm_upper())
    system = build_singular_section_system(g, r1, r2)
    return isolate_roots(system, search_box(bounds), options)


def cusp_signature(
    g: Geometry, cusp: Configuration, options: Optional[SolverOptions] = None, radius: float = 1e-3
) -> bool:
    """尖点处的退化特征：该杆长下的正运动学在尖点位姿附近留下未解决盒，
    或有多个装配模式聚在该位姿附近。"""
    report = direct_kinematics(g, cusp.joints, options)
    pose = cusp.pose.as_tuple()
    if report.unresolved_containing(pose, tol=radius):
        return True
    near = [r for r in report.roots if math.dist(r.midpoint, pose) <= radius]
    return len(near) >= 2
