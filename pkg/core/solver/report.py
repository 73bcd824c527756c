"""求解器的输入选项与输出结果类型。"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Any, Mapping, Optional, Sequence

from core.errors import SolverError
from core.numeric.box import Box
from core.numeric.interval import Interval
from models.solve import SolveStats

UNIQUE_IN_BOX = "unique-in-box"


def search_box(bounds: Mapping[str, tuple[Any, Any]]) -> Box:
    """构造搜索盒；每个分量都必须有限。"""
    box = Box.from_bounds(bounds)
    for name, iv in zip(box.names, box.intervals):
        if not (math.isfinite(iv.lo) and math.isfinite(iv.hi)):
            raise SolverError(f"搜索盒分量 {name} 必须有界")
    return box


SearchBox = Box


@dataclass(frozen=True)
class SolverOptions:
    min_width: float = 1e-9
    max_depth: int = 64
    max_boxes: int = 400_000
    krawczyk_width: float = 0.125
    refine_steps: int = 30
    split_depth: int = 3
    threads: int = 1

    def __post_init__(self) -> None:
        if self.min_width <= 0 or self.max_depth <= 0 or self.max_boxes <= 0:
            raise SolverError("min_width、max_depth、max_boxes 必须为正")
        if self.threads < 1:
            raise SolverError("threads 至少为 1")

    @classmethod
    def from_settings(cls, source: Any, **overrides: Any) -> "SolverOptions":
        """从 Settings 取默认值；值为 None 的覆盖项忽略。"""
        values = {
            "min_width": source.min_width,
            "max_depth": source.max_depth,
            "max_boxes": source.max_boxes,
            "krawczyk_width": source.krawczyk_width,
            "refine_steps": source.refine_steps,
            "split_depth": source.split_depth,
            "threads": source.threads,
        }
        values.update({k: v for k, v in overrides.items() if v is not None})
        return cls(**values)


@dataclass(frozen=True, slots=True)
class CertifiedRoot:
    """已证明恰含一个实根的盒子。"""

    box: Box
    midpoint: tuple[float, ...]
    # 全部方程在盒上的区间模最大值
    residual: float
    # 用于认证的方阵子系统行号
    selected: tuple[int, ...]
    # 未选方程在盒上的残差区间（方阵系统为空）
    unselected_residuals: tuple[Interval, ...] = ()
    certificate: str = UNIQUE_IN_BOX

    @property
    def names(self) -> tuple[str, ...]:
        return self.box.names

    @property
    def width(self) -> float:
        return self.box.width

    def value(self, name: str) -> float:
        return self.midpoint[self.box.names.index(name)]

    def as_point(self) -> dict[str, float]:
        return dict(zip(self.box.names, self.midpoint))


@dataclass(frozen=True)
class SolveReport:
    """roots 按盒子下界字典序排列；unresolved 为空当且仅当计数在搜索盒上完整。"""

    unknowns: tuple[str, ...]
    roots: tuple[CertifiedRoot, ...]
    unresolved: tuple[Box, ...]
    stats: SolveStats
    search_box: Optional[Box] = None
    wall_time: float = field(default=0.0, compare=False)

    @property
    def complete(self) -> bool:
        return not self.unresolved

    def __len__(self) -> int:
        return len(self.roots)

    def points(self) -> list[dict[str, float]]:
        return [r.as_point() for r in self.roots]

    def unresolved_containing(self, values: Sequence[float], tol: float = 0.0) -> list[Box]:
        """包含给定点（允许 tol 的外扩）的未解决盒子。"""
        hits = []
        for box in self.unresolved:
            if all(iv.lo - tol <= v <= iv.hi + tol for iv, v in zip(box.intervals, values)):
                hits.append(box)
        return hits
