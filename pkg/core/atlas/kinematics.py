"""搜索盒与正运动学（装配模式）。"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from typing import Optional

from core.errors import GeometryError
from core.model.geometry import Geometry
from core.model.kinematics import Configuration, JointLengths, Pose
from core.model.systems import CUSP_UNKNOWNS, POSE_VARIABLES, build_dk_system, singular_poly
from core.numeric.box import Box
from core.numeric.interval import Interval
from core.poly.system import PolySystem
from core.solver.isolate import isolate_roots, solve_overdetermined
from core.solver.report import CertifiedRoot, SolveReport, SolverOptions, search_box

logger = logging.getLogger(__name__)

# 搜索盒相对外扩量，避免根恰好落在盒边界上而无法认证
BOX_MARGIN = Fraction(1, 1024)

DIRECTION_VARIABLES: tuple[str, ...] = ("tx", "ty")


def search_box_for(g: Geometry, r1: Fraction) -> Box:
    """尖点方程组 (B1x, B1y, tx, ty, r2, r3) 的搜索盒；包含全部 ρ2, ρ3 ≥ 0 的实解。"""
    r1 = Fraction(r1)
    if r1 < 0:
        raise GeometryError(f"r1 必须非负，实际为 {r1}")
    b = r1 * (1 + BOX_MARGIN)
    t = 1 + BOX_MARGIN
    bounds = {
        "B1x": (-b, b),
        "B1y": (-b, b),
        "tx": (-t, t),
        "ty": (-t, t),
        "r2": (Fraction(0), r1 + g.d1 + g.A2x),
        "r3": (Fraction(0), r1 + g.d3 + g.a3_norm_upper()),
    }
    return search_box({name: bounds[name] for name in CUSP_UNKNOWNS})


def pose_box_for(g: Geometry, r1: Fraction) -> Box:
    """正运动学 (B1x, B1y, tx, ty) 的搜索盒。"""
    full = search_box_for(g, r1)
    return Box(POSE_VARIABLES, tuple(full[name] for name in POSE_VARIABLES))


def _lift_to_pose(box: Box) -> Box:
    """(tx, ty) 盒补上退化的 B1 = (0, 0) 分量。"""
    return Box(POSE_VARIABLES, (Interval.point(0.0), Interval.point(0.0)) + box.intervals)


def _dk_at_base(g: Geometry, exact: dict[str, Fraction], options: Optional[SolverOptions]) -> SolveReport:
    """r1 = 0：B1 与 A1 重合，E1 恒为零，只解方向 (tx, ty) 上的超定方程组 E2..E4。"""
    dk = build_dk_system(g, exact["r1"], exact["r2"], exact["r3"])
    origin = {"B1x": Fraction(0), "B1y": Fraction(0)}
    system = PolySystem(
        equations=tuple(eq.substitute_many(origin) for eq in dk.equations[1:]),
        unknowns=DIRECTION_VARIABLES,
        labels=dk.labels[1:],
        name=f"{dk.name}@A1",
    )
    pose_box = pose_box_for(g, exact["r1"])
    report = solve_overdetermined(
        system, Box(DIRECTION_VARIABLES, (pose_box["tx"], pose_box["ty"])), options
    )
    roots = tuple(
        replace(
            root,
            box=_lift_to_pose(root.box),
            midpoint=(0.0, 0.0) + root.midpoint,
            selected=tuple(i + 1 for i in root.selected),
        )
        for root in report.roots
    )
    return replace(
        report,
        unknowns=POSE_VARIABLES,
        roots=roots,
        unresolved=tuple(_lift_to_pose(b) for b in report.unresolved),
        search_box=pose_box,
    )


def direct_kinematics(
    g: Geometry, joints: JointLengths, options: Optional[SolverOptions] = None
) -> SolveReport:
    """给定杆长的全部实装配模式。"""
    exact = joints.exact()
    if exact["r1"] == 0:
        report = _dk_at_base(g, exact, options)
    else:
        system = build_dk_system(g, exact["r1"], exact["r2"], exact["r3"])
        report = isolate_roots(system, pose_box_for(g, exact["r1"]), options)
    if report.complete and len(report) > 6:
        # 次数六的上界被突破说明认证有误
        logger.error("正运动学认证根数 %d 超过 6: %s", len(report), joints)
    return report


@dataclass(frozen=True, slots=True)
class AssemblyMode:
    """一个认证的装配模式及其 J 值（符号区分奇异曲面两侧）。"""

    pose: Pose
    det_j: float
    box_width: float

    @classmethod
    def from_root(cls, g: Geometry, root: CertifiedRoot) -> "AssemblyMode":
        point = root.as_point()
        pose = Pose(point["B1x"], point["B1y"], point["tx"], point["ty"])
        return cls(pose, singular_poly(g).evaluate_float(point), root.width)


def assembly_modes(g: Geometry, report: SolveReport) -> list[AssemblyMode]:
    return [AssemblyMode.from_root(g, r) for r in report.roots]


def configuration_from_root(root: CertifiedRoot, r1: Fraction) -> Configuration:
    """尖点方程组的根（未知量含 r2, r3）转为完整构型。"""
    p = root.as_point()
    return Configuration(
        JointLengths(float(r1), p["r2"], p["r3"]),
        Pose(p["B1x"], p["B1y"], p["tx"], p["ty"]),
    )
