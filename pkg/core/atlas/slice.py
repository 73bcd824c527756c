"""奇异曲线在 (ρ2, ρ3) 平面上的切片。

每个网格节点做一次认证正运动学：s = 各装配模式 J 值之积（无实解时 s = +inf），
未能完整认证的节点记为未定义。s 的符号变化或解数变化处即奇异曲线的投影。
"""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass, replace
from fractions import Fraction
from multiprocessing import Pool
from typing import Optional

import numpy as np

from core.atlas.contour import extract_polylines
from core.atlas.kinematics import assembly_modes, direct_kinematics
from core.errors import ConfigError
from core.model.geometry import Geometry
from core.model.kinematics import JointLengths
from core.solver.report import SolverOptions

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class SingularSlice:
    r1: Fraction
    r2_values: tuple[float, ...]
    r3_values: tuple[float, ...]
    # values[i, j] 对应 (r2_values[i], r3_values[j])
    values: np.ndarray
    counts: np.ndarray
    polylines: tuple[tuple[tuple[float, float], ...], ...]

    @property
    def grid_size(self) -> int:
        return len(self.r2_values)

    @property
    def failures(self) -> int:
        return int(np.count_nonzero(self.counts < 0))

    @property
    def failure_ratio(self) -> float:
        return self.failures / self.counts.size

    @property
    def cell_size(self) -> tuple[float, float]:
        return (
            self.r2_values[1] - self.r2_values[0],
            self.r3_values[1] - self.r3_values[0],
        )

    def distance_to_curve(self, r2: float, r3: float) -> float:
        """点到全部折线顶点与线段的最小距离。"""
        best = math.inf
        for line in self.polylines:
            for k, p in enumerate(line):
                best = min(best, math.dist(p, (r2, r3)))
                if k + 1 < len(line):
                    best = min(best, _segment_distance(p, line[k + 1], (r2, r3)))
        return best


def _segment_distance(a: tuple[float, float], b: tuple[float, float], p: tuple[float, float]) -> float:
    ax, ay = a
    dx, dy = b[0] - ax, b[1] - ay
    length2 = dx * dx + dy * dy
    if length2 == 0:
        return math.dist(a, p)
    t = min(max(((p[0] - ax) * dx + (p[1] - ay) * dy) / length2, 0.0), 1.0)
    return math.dist((ax + t * dx, ay + t * dy), p)


def grid_values(lo: Fraction, hi: Fraction, n: int) -> list[Fraction]:
    step = (hi - lo) / (n - 1)
    return [lo + k * step for k in range(n)]


def _node_task(args: tuple[Geometry, Fraction, Fraction, Fraction, SolverOptions]) -> tuple[float, int]:
    # 进程池任务：返回 (s, 解数)；未认证完整时 (nan, -1)
    g, r1, r2, r3, options = args
    report = direct_kinematics(g, JointLengths(r1, r2, r3), options)
    if not report.complete:
        return math.nan, -1
    modes = assembly_modes(g, report)
    if not modes:
        return math.inf, 0
    return float(np.prod([m.det_j for m in modes])), len(modes)


def singular_slice(
    g: Geometry,
    r1: Fraction,
    grid: int,
    lo: Fraction = Fraction(0),
    hi: Fraction = Fraction(35),
    options: Optional[SolverOptions] = None,
) -> SingularSlice:
    if grid < 2:
        raise ConfigError(f"网格至少为 2×2，实际为 {grid}")
    lo, hi = Fraction(lo), Fraction(hi)
    if hi <= lo:
        raise ConfigError(f"切片范围 [{lo}, {hi}] 为空")
    options = options or SolverOptions()
    threads = options.threads
    # 并行发生在节点层，单个求解保持串行
    node_options = replace(options, threads=1)
    r1 = Fraction(r1)
    axis = grid_values(lo, hi, grid)
    tasks = [(g, r1, r2, r3, node_options) for r2 in axis for r3 in axis]

    logger.info("奇异曲线切片 r1=%s：%d×%d 网格", float(r1), grid, grid)
    if threads > 1:
        with Pool(processes=threads) as pool:
            results = pool.map(_node_task, tasks, chunksize=max(1, len(tasks) // (threads * 8)))
    else:
        results = [_node_task(t) for t in tasks]

    values = np.array([v for v, _ in results], dtype=float).reshape(grid, grid)
    counts = np.array([c for _, c in results], dtype=int).reshape(grid, grid)
    floats = tuple(float(v) for v in axis)
    polylines = extract_polylines(floats, floats, values, counts)
    result = SingularSlice(
        r1=r1,
        r2_values=floats,
        r3_values=floats,
        values=values,
        counts=counts,
        polylines=tuple(tuple(line) for line in polylines),
    )
    if result.failures:
        logger.warning("%d 个网格节点认证失败（%.2f%%）", result.failures, 100 * result.failure_ratio)
    return result
