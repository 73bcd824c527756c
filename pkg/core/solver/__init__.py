"""认证实根隔离：区间剪枝 + Krawczyk 检验。"""

from core.solver.isolate import isolate_roots, residual_intervals, solve_overdetermined
from core.solver.krawczyk import KrawczykResult, KrawczykStatus, krawczyk_test, select_rows
from core.solver.prune import prune
from core.solver.report import CertifiedRoot, SearchBox, SolveReport, SolverOptions, search_box
from core.solver.stats import SolveStatsCollector

__all__ = [
    "CertifiedRoot",
    "KrawczykResult",
    "KrawczykStatus",
    "SearchBox",
    "SolveReport",
    "SolveStatsCollector",
    "SolverOptions",
    "isolate_roots",
    "krawczyk_test",
    "prune",
    "residual_intervals",
    "search_box",
    "select_rows",
    "solve_overdetermined",
]
