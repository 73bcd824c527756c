"""求解统计收集器。"""

from __future__ import annotations

from models.solve import SolveStats


class SolveStatsCollector:
    """仅负责统计累加与查询。"""

    def __init__(self) -> None:
        self._stats = SolveStats()

    def record_box(self, depth: int) -> None:
        self._stats.boxes_processed += 1
        if depth > self._stats.max_depth_reached:
            self._stats.max_depth_reached = depth

    def record_pruned(self) -> None:
        self._stats.boxes_pruned += 1

    def record_bisection(self) -> None:
        self._stats.bisections += 1

    def record_krawczyk(self) -> None:
        self._stats.krawczyk_calls += 1

    def record_certified(self) -> None:
        self._stats.certified += 1

    def record_rejected(self) -> None:
        self._stats.rejected += 1

    def record_unresolved(self, count: int = 1) -> None:
        self._stats.unresolved += count

    def record_budget_exhausted(self) -> None:
        self._stats.budget_exhausted = True

    @property
    def boxes_processed(self) -> int:
        return self._stats.boxes_processed

    def get_stats(self) -> SolveStats:
        return self._stats.model_copy()

    def reset(self) -> None:
        self._stats = SolveStats()
