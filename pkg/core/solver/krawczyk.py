"""Krawczyk 算子：盒内根的存在唯一性检验。

K(X) = c − Y·f(c) + (I − Y·J(X))·(X − c)，Y 为中点雅可比矩阵的浮点逆。
K(X) ⊂ int(X) 证明 X 内恰有一个根；K(X) ∩ X = ∅ 证明 X 内无根；
X 内的所有根都落在 K(X) 中。
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from enum import Enum
from typing import Optional, Sequence

import numpy as np

from core.errors import IntervalDomainError
from core.numeric.box import Box
from core.numeric.interval import Interval, interval_sum
from core.poly.system import CompiledSystem
from core.solver.prune import interval_jacobian

logger = logging.getLogger(__name__)

# 中点雅可比矩阵条件数上限，超过视为数值奇异
MAX_CONDITION = 1e14
# 行选择时（行归一化后）主元的最小模
MIN_PIVOT = 1e-10
# ε-膨胀的相对外扩量
INFLATION = 0.25


class KrawczykStatus(str, Enum):
    UNIQUE = "unique"
    INCONCLUSIVE = "inconclusive"
    EMPTY = "empty"


@dataclass(frozen=True, slots=True)
class KrawczykResult:
    status: KrawczykStatus
    # K(X) ∩ X；EMPTY 时为 None
    box: Optional[Box]


def midpoint_jacobian(
    system: CompiledSystem, point: Sequence[float], rows: Optional[Sequence[int]] = None
) -> np.ndarray:
    indices = range(len(system.equations)) if rows is None else rows
    return np.array(
        [[g.eval_float(point) for g in system.gradients[i]] for i in indices], dtype=float
    )


def select_rows(jac: np.ndarray) -> Optional[tuple[int, ...]]:
    """在 m×n 中点雅可比矩阵上做按最大主元的贪心消元，选出 n 行。

    先按行范数归一化；某一列找不到足够大的主元时返回 None。
    """
    m, n = jac.shape
    if m < n:
        return None
    a = np.array(jac, dtype=float, copy=True)
    norms = np.linalg.norm(a, axis=1)
    if not np.all(np.isfinite(norms)):
        return None
    nonzero = norms > 0
    a[nonzero] /= norms[nonzero, None]
    available = list(range(m))
    chosen: list[int] = []
    for k in range(n):
        # 平局取行号最小者
        r = max(available, key=lambda i: (abs(a[i, k]), -i))
        pivot = a[r, k]
        if abs(pivot) <= MIN_PIVOT:
            return None
        chosen.append(r)
        available.remove(r)
        for i in available:
            a[i, k:] -= (a[i, k] / pivot) * a[r, k:]
    return tuple(sorted(chosen))


def krawczyk_test(
    system: CompiledSystem, box: Box, rows: Optional[Sequence[int]] = None
) -> KrawczykResult:
    """对 rows 指定的方阵子系统（默认全部方程）做一次 Krawczyk 检验。"""
    n = len(box)
    selected = tuple(range(len(system.equations))) if rows is None else tuple(rows)
    if len(selected) != n:
        return KrawczykResult(KrawczykStatus.INCONCLUSIVE, box)

    xs = box.intervals
    center = box.mid()
    jm = midpoint_jacobian(system, center, selected)
    try:
        if not np.all(np.isfinite(jm)) or np.linalg.cond(jm) > MAX_CONDITION:
            return KrawczykResult(KrawczykStatus.INCONCLUSIVE, box)
        y = np.linalg.inv(jm)
    except np.linalg.LinAlgError:
        return KrawczykResult(KrawczykStatus.INCONCLUSIVE, box)

    try:
        center_ivs = [Interval.point(c) for c in center]
        fc = [system.equations[r].eval_interval(center_ivs) for r in selected]
        jx = interval_jacobian(system, xs, selected)
        offsets = [xs[j] - center[j] for j in range(n)]
        images: list[Interval] = []
        for i in range(n):
            yi = [float(v) for v in y[i]]
            acc = Interval.point(center[i]) - interval_sum(
                Interval.point(yi[k]) * fc[k] for k in range(n)
            )
            for j in range(n):
                yj = interval_sum(Interval.point(yi[k]) * jx[k][j] for k in range(n))
                m_ij = (1.0 if i == j else 0.0) - yj
                acc = acc + m_ij * offsets[j]
            images.append(acc)
    except (IntervalDomainError, ValueError, OverflowError):
        return KrawczykResult(KrawczykStatus.INCONCLUSIVE, box)

    if all(k.is_interior_of(x) for k, x in zip(images, xs)):
        return KrawczykResult(KrawczykStatus.UNIQUE, Box(box.names, tuple(images)))
    narrowed = []
    for k, x in zip(images, xs):
        c = k.intersect(x)
        if c is None:
            return KrawczykResult(KrawczykStatus.EMPTY, None)
        narrowed.append(c)
    return KrawczykResult(KrawczykStatus.INCONCLUSIVE, Box(box.names, tuple(narrowed)))


def refine(
    system: CompiledSystem, box: Box, rows: Optional[Sequence[int]], steps: int
) -> Box:
    """对已认证的盒反复取 K(X) ∩ X；结果仍只含原盒中的那个根。"""
    current = box
    for _ in range(steps):
        result = krawczyk_test(system, current, rows)
        if result.status is not KrawczykStatus.UNIQUE or result.box is None:
            break
        if result.box.width >= current.width:
            break
        current = result.box
    return current


def inflate(box: Box, factor: float = INFLATION) -> Box:
    """各分量向两侧外扩 factor·宽度（另加极小的绝对量），用于认证恰在盒边界上的根。"""
    parts = []
    for iv in box.intervals:
        delta = factor * iv.width + 1e-13 * max(1.0, iv.mag)
        parts.append(iv - Interval(-delta, delta))
    return Box(box.names, tuple(parts))
