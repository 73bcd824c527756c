"""区间剪枝：排除检验与均值形式收缩。"""

from __future__ import annotations

import logging
from typing import Optional, Sequence

from core.errors import IntervalDomainError
from core.numeric.box import Box
from core.numeric.interval import Interval, interval_sum
from core.poly.system import CompiledSystem

logger = logging.getLogger(__name__)


def evaluate_equations(system: CompiledSystem, xs: Sequence[Interval]) -> list[Interval]:
    return [eq.eval_interval(xs) for eq in system.equations]


def interval_jacobian(
    system: CompiledSystem, xs: Sequence[Interval], rows: Optional[Sequence[int]] = None
) -> list[list[Interval]]:
    indices = range(len(system.equations)) if rows is None else rows
    return [[g.eval_interval(xs) for g in system.gradients[i]] for i in indices]


def excludes_zero(system: CompiledSystem, box: Box) -> bool:
    """某个方程在盒上的区间值不含 0，则盒内无根。"""
    xs = box.intervals
    return any(not eq.eval_interval(xs).contains_zero() for eq in system.equations)


def prune(system: CompiledSystem, box: Box, contract: bool = True) -> Optional[Box]:
    """返回包含盒内全部根的子盒；None 表示盒内无根。

    contract 为真时，对每个 (方程, 变量) 以盒中点为展开点做一遍均值形式收缩：
    x_j ∈ c_j − (f(c) + Σ_{k≠j} ∂f/∂x_k(X)·(X_k − c_k)) / ∂f/∂x_j(X)。
    """
    if excludes_zero(system, box):
        return None
    if not contract:
        return box

    xs = list(box.intervals)
    center = box.mid()
    center_ivs = [Interval.point(c) for c in center]
    try:
        grads = interval_jacobian(system, box.intervals)
        for i, eq in enumerate(system.equations):
            fc = eq.eval_interval(center_ivs)
            row = grads[i]
            for j, g in enumerate(row):
                if g.contains_zero():
                    continue
                rest = fc + interval_sum(
                    row[k] * (xs[k] - center[k]) for k in range(len(xs)) if k != j
                )
                candidate = Interval.point(center[j]) - rest / g
                narrowed = candidate.intersect(xs[j])
                if narrowed is None:
                    return None
                xs[j] = narrowed
    except (IntervalDomainError, ValueError, OverflowError):
        # 溢出或 NaN 时放弃收缩，保留排除检验的结论
        logger.debug("均值形式收缩失败，保留原盒")
        return box
    return Box(box.names, tuple(xs))
