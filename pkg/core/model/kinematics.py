"""位姿、关节长度与逆运动学。"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Union

from core.errors import GeometryError
from core.model.geometry import Geometry

Length = Union[float, Fraction]


@dataclass(frozen=True, slots=True)
class Pose:
    """平台位姿：B1 坐标与方向 (tx, ty) = (cos α, sin α)。"""

    B1x: float
    B1y: float
    tx: float
    ty: float

    @classmethod
    def from_angle(cls, B1x: float, B1y: float, alpha_degrees: float) -> "Pose":
        a = math.radians(alpha_degrees)
        return cls(B1x, B1y, math.cos(a), math.sin(a))

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.B1x, self.B1y, self.tx, self.ty)

    def as_point(self) -> dict[str, float]:
        return {"B1x": self.B1x, "B1y": self.B1y, "tx": self.tx, "ty": self.ty}


@dataclass(frozen=True, slots=True)
class JointLengths:
    """三根驱动杆长 (ρ1, ρ2, ρ3)，精确有理或浮点。"""

    r1: Length
    r2: Length
    r3: Length

    def __post_init__(self) -> None:
        if min(self.r1, self.r2, self.r3) < 0:
            raise GeometryError(f"杆长不能为负: {self.as_tuple()}")

    def as_tuple(self) -> tuple[Length, Length, Length]:
        return (self.r1, self.r2, self.r3)

    def exact(self) -> dict[str, Fraction]:
        """供代入多项式的精确值（浮点按其二进制值精确转换）。"""
        return {"r1": Fraction(self.r1), "r2": Fraction(self.r2), "r3": Fraction(self.r3)}

    def scaled(self, factor: Fraction) -> "JointLengths":
        s = Fraction(factor)
        return JointLengths(*(Fraction(r) * s for r in self.as_tuple()))


@dataclass(frozen=True, slots=True)
class Configuration:
    """完整构型 (ρ1, ρ2, ρ3, B1x, B1y, tx, ty)。"""

    joints: JointLengths
    pose: Pose

    def as_tuple(self) -> tuple[float, ...]:
        return tuple(float(r) for r in self.joints.as_tuple()) + self.pose.as_tuple()

    def as_point(self) -> dict[str, float]:
        point = self.pose.as_point()
        point.update({"r1": float(self.joints.r1), "r2": float(self.joints.r2), "r3": float(self.joints.r3)})
        return point


def platform_points(g: Geometry, pose: Pose) -> tuple[tuple[float, float], ...]:
    """平台三顶点 B1、B2、B3 的坐标。"""
    bx, by = float(g.betax), float(g.betay)
    d1, d3 = float(g.d1), float(g.d3)
    b1 = (pose.B1x, pose.B1y)
    b2 = (pose.B1x + d1 * pose.tx, pose.B1y + d1 * pose.ty)
    b3 = (
        pose.B1x + d3 * (pose.tx * bx - pose.ty * by),
        pose.B1y + d3 * (pose.tx * by + pose.ty * bx),
    )
    return (b1, b2, b3)


def inverse_kinematics(g: Geometry, pose: Pose) -> JointLengths:
    """ρi = ‖AiBi‖。"""
    if abs(pose.tx * pose.tx + pose.ty * pose.ty - 1.0) > 1e-9:
        raise GeometryError(f"(tx, ty) = ({pose.tx}, {pose.ty}) 不在单位圆上")
    lengths = []
    for (ax, ay), (bx, by) in zip(g.base_points(), platform_points(g, pose)):
        lengths.append(math.hypot(bx - float(ax), by - float(ay)))
    return JointLengths(*lengths)


def pose_from_leg_angles(
    g: Geometry, rho1: float, theta1_degrees: float, rho2: float, theta2_degrees: float
) -> Pose:
    """由两条腿的极坐标重建位姿（B1 = ρ1·e^{iθ1}，B2 = A2 + ρ2·e^{iθ2}）。"""
    t1, t2 = math.radians(theta1_degrees), math.radians(theta2_degrees)
    b1 = (rho1 * math.cos(t1), rho1 * math.sin(t1))
    b2 = (float(g.A2x) + rho2 * math.cos(t2), rho2 * math.sin(t2))
    dx, dy = b2[0] - b1[0], b2[1] - b1[1]
    norm = math.hypot(dx, dy)
    if norm == 0:
        raise GeometryError("B1 与 B2 重合，无法确定平台方向")
    return Pose(b1[0], b1[1], dx / norm, dy / norm)
