"""分支剪枝求根：方阵模式与超定模式。

初始盒按固定规则预切分成 2^split_depth 棵子树，每棵子树独立深度优先处理，
预算按子树均分；结果按盒下界字典序合并，串行与并行的结果完全一致。
"""

from __future__ import annotations

import logging
import time
from dataclasses import dataclass
from multiprocessing import Pool
from typing import Optional, Sequence

from core.errors import SolverError
from core.numeric.box import Box
from core.numeric.interval import Interval
from core.poly.system import CompiledSystem, PolySystem
from core.solver.krawczyk import (
    KrawczykStatus,
    inflate,
    krawczyk_test,
    midpoint_jacobian,
    refine,
    select_rows,
)
from core.solver.prune import evaluate_equations, prune
from core.solver.report import CertifiedRoot, SolveReport, SolverOptions
from core.solver.stats import SolveStatsCollector
from models.solve import SolveStats

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class _SubtreeTask:
    system: CompiledSystem
    box: Box
    depth: int
    reference: tuple[float, ...]
    options: SolverOptions
    budget: int
    overdetermined: bool


@dataclass(frozen=True)
class _SubtreeResult:
    roots: tuple[CertifiedRoot, ...]
    unresolved: tuple[Box, ...]
    stats: SolveStats


def _widest(box: Box, reference: Sequence[float]) -> tuple[int, float]:
    widths = box.normalized_widths(reference)
    best = 0
    for i, w in enumerate(widths):
        if w > widths[best]:
            best = i
    return best, widths[best] if widths else 0.0


def _presplit(box: Box, reference: Sequence[float], levels: int) -> list[Box]:
    boxes = [box]
    for _ in range(levels):
        nxt: list[Box] = []
        for b in boxes:
            index, width = _widest(b, reference)
            if width <= 0.0:
                nxt.append(b)
            else:
                nxt.extend(b.bisect(index))
        boxes = nxt
    return boxes


def _certify(
    system: CompiledSystem, box: Box, overdetermined: bool, options: SolverOptions,
    stats: SolveStatsCollector,
) -> tuple[KrawczykStatus, Optional[Box], Optional[CertifiedRoot]]:
    """返回 (状态, 收缩后的盒, 认证根)。超定模式下被否决的根返回 (EMPTY, None, None)。"""
    rows: Optional[tuple[int, ...]] = None
    if overdetermined:
        rows = select_rows(midpoint_jacobian(system, box.mid()))
        if rows is None:
            return KrawczykStatus.INCONCLUSIVE, box, None
    stats.record_krawczyk()
    result = krawczyk_test(system, box, rows)
    certified = result.box if result.status is KrawczykStatus.UNIQUE else None
    if result.status is KrawczykStatus.INCONCLUSIVE:
        # 根恰在盒边界上时只能在外扩盒上认证；外扩盒须与原盒相交
        stats.record_krawczyk()
        widened = krawczyk_test(system, inflate(box), rows)
        if (
            widened.status is KrawczykStatus.UNIQUE
            and widened.box is not None
            and widened.box.intersect(box) is not None
        ):
            certified = widened.box
    if certified is None:
        return result.status, result.box, None

    final = refine(system, certified, rows, options.refine_steps)
    root = _make_root(system, final, rows)
    if root is None:
        stats.record_rejected()
        logger.debug("根被未选方程否决: %s", final.mid())
        return KrawczykStatus.EMPTY, None, None
    stats.record_certified()
    return KrawczykStatus.UNIQUE, final, root


def _make_root(
    system: CompiledSystem, box: Box, rows: Optional[tuple[int, ...]]
) -> Optional[CertifiedRoot]:
    """构造认证根；未选方程的残差区间不含 0 时返回 None。"""
    values = evaluate_equations(system, box.intervals)
    selected = rows if rows is not None else tuple(range(len(values)))
    unselected = tuple(v for i, v in enumerate(values) if i not in selected)
    if any(not v.contains_zero() for v in unselected):
        return None
    return CertifiedRoot(
        box=box,
        midpoint=box.mid(),
        residual=max(v.mag for v in values),
        selected=selected,
        unselected_residuals=unselected,
    )


def _solve_subtree(task: _SubtreeTask) -> _SubtreeResult:
    # 供进程池调用：模块级、单参数
    options = task.options
    stats = SolveStatsCollector()
    roots: list[CertifiedRoot] = []
    unresolved: list[Box] = []
    stack: list[tuple[Box, int]] = [(task.box, task.depth)]

    while stack:
        if stats.boxes_processed >= task.budget:
            stats.record_budget_exhausted()
            unresolved.extend(b for b, _ in stack)
            break
        current, depth = stack.pop()
        stats.record_box(depth)

        _, norm = _widest(current, task.reference)
        small = norm <= options.krawczyk_width
        pruned = prune(task.system, current, contract=small)
        if pruned is None:
            stats.record_pruned()
            continue
        current = pruned

        if small:
            status, contracted, root = _certify(
                task.system, current, task.overdetermined, options, stats
            )
            if root is not None:
                roots.append(root)
                continue
            if status is KrawczykStatus.EMPTY or contracted is None:
                stats.record_pruned()
                continue
            current = contracted

        index, norm = _widest(current, task.reference)
        if norm <= options.min_width or depth >= options.max_depth:
            unresolved.append(current)
            continue
        left, right = current.bisect(index)
        stats.record_bisection()
        stack.append((right, depth + 1))
        stack.append((left, depth + 1))

    stats.record_unresolved(len(unresolved))
    return _SubtreeResult(tuple(roots), tuple(unresolved), stats.get_stats())


def _validate(system: PolySystem, box: Box) -> None:
    if system.parameters:
        raise SolverError(f"求解前必须代入全部参数，剩余 {system.parameters}")
    if tuple(box.names) != tuple(system.unknowns):
        raise SolverError(f"搜索盒变量 {box.names} 与未知量 {system.unknowns} 不一致")


def _run(system: PolySystem, box: Box, options: SolverOptions, overdetermined: bool) -> SolveReport:
    started = time.perf_counter()
    compiled = system.compile()
    reference = box.widths()
    subtrees = _presplit(box, reference, options.split_depth)
    budget = max(1, options.max_boxes // len(subtrees))
    tasks = [
        _SubtreeTask(compiled, b, options.split_depth, reference, options, budget, overdetermined)
        for b in subtrees
    ]
    logger.info(
        "开始求解 %s：%d 个方程，%d 个未知量，%d 棵子树",
        system.name, len(system), len(system.unknowns), len(tasks),
    )

    if options.threads > 1 and len(tasks) > 1:
        with Pool(processes=min(options.threads, len(tasks))) as pool:
            results = pool.map(_solve_subtree, tasks)
    else:
        results = [_solve_subtree(t) for t in tasks]

    stats = SolveStats()
    roots: list[CertifiedRoot] = []
    unresolved: list[Box] = []
    for res in results:
        stats = stats.merged(res.stats)
        roots.extend(res.roots)
        unresolved.extend(res.unresolved)
    roots.sort(key=lambda r: r.box.sort_key())
    roots = _merge_duplicates(compiled, roots, unresolved)
    stats = stats.model_copy(update={"unresolved": len(unresolved)})
    unresolved.sort(key=Box.sort_key)
    _check_disjoint(roots)

    elapsed = time.perf_counter() - started
    logger.info(
        "求解 %s 完成：%d 个认证根，%d 个未解决盒，处理 %d 个盒，耗时 %.2fs",
        system.name, len(roots), len(unresolved), stats.boxes_processed, elapsed,
    )
    return SolveReport(
        unknowns=tuple(system.unknowns),
        roots=tuple(roots),
        unresolved=tuple(unresolved),
        stats=stats,
        search_box=box,
        wall_time=elapsed,
    )


def _merge_duplicates(
    system: CompiledSystem, roots: Sequence[CertifiedRoot], unresolved: list[Box]
) -> list[CertifiedRoot]:
    """相邻叶子经外扩认证到同一个根时合并。

    两个相交的认证盒若其并包也通过唯一性检验，则为同一根，保留较窄者；
    否则无法区分，并包记为未解决。
    """
    kept: list[CertifiedRoot] = []
    for root in roots:
        clash = next((k for k, other in enumerate(kept) if not other.box.is_disjoint(root.box)), None)
        if clash is None:
            kept.append(root)
            continue
        other = kept[clash]
        rows = root.selected if len(root.selected) < len(system) else None
        hull = other.box.hull(root.box)
        if krawczyk_test(system, inflate(hull), rows).status is KrawczykStatus.UNIQUE:
            if root.width < other.width:
                kept[clash] = root
            continue
        logger.warning("相交的认证盒无法合并，记为未解决: %s", hull)
        kept.pop(clash)
        unresolved.append(hull)
    return kept


def _check_disjoint(roots: Sequence[CertifiedRoot]) -> None:
    for i in range(len(roots)):
        for j in range(i + 1, len(roots)):
            if not roots[i].box.is_disjoint(roots[j].box):
                raise SolverError(f"认证盒相交: {roots[i].box} 与 {roots[j].box}")


def isolate_roots(system: PolySystem, box: Box, options: Optional[SolverOptions] = None) -> SolveReport:
    """方阵系统在搜索盒内的全部实根。"""
    _validate(system, box)
    if not system.is_square:
        raise SolverError(
            f"isolate_roots 需要方阵系统，实际 {len(system)} 个方程 {len(system.unknowns)} 个未知量"
        )
    return _run(system, box, options or SolverOptions(), overdetermined=False)


def solve_overdetermined(
    system: PolySystem, box: Box, options: Optional[SolverOptions] = None
) -> SolveReport:
    """方程多于未知量：全部方程参与剪枝，在选出的方阵子系统上认证。"""
    _validate(system, box)
    if len(system) <= len(system.unknowns):
        raise SolverError("solve_overdetermined 需要方程数多于未知量数")
    return _run(system, box, options or SolverOptions(), overdetermined=True)


def residual_intervals(system: PolySystem, box: Box) -> list[Interval]:
    """全部方程在盒上的区间值（未代入参数时报错）。"""
    _validate(system, box)
    return evaluate_equations(system.compile(), box.intervals)
