"""尖点数随 ρ1 变化的剖面，计数变化点用二分夹逼。"""

from __future__ import annotations

import logging
from dataclasses import dataclass, replace
from fractions import Fraction
from multiprocessing import Pool
from typing import Optional

from core.atlas.cusps import cusp_slice
from core.errors import ConfigError
from core.model.geometry import Geometry
from core.numeric.rational import rational_from_decimal
from core.solver.report import SolverOptions

logger = logging.getLogger(__name__)

# 未解决样本的扰动量：step / RETRY_DIVISOR
RETRY_DIVISOR = 17


@dataclass(frozen=True, slots=True)
class Breakpoint:
    """计数在 (lo, hi) 内发生变化。"""

    lo: Fraction
    hi: Fraction
    left_count: int
    right_count: int

    @property
    def midpoint(self) -> float:
        return float((self.lo + self.hi) / 2)

    @property
    def width(self) -> float:
        return float(self.hi - self.lo)


@dataclass(frozen=True)
class CountProfile:
    lo: Fraction
    hi: Fraction
    breakpoints: tuple[Breakpoint, ...]
    # counts[k] 为第 k 个开区间（相邻断点之间）上的计数
    counts: tuple[int, ...]
    excluded_samples: tuple[float, ...]
    samples: tuple[tuple[Fraction, int], ...]

    def intervals(self) -> list[tuple[float, float, int]]:
        """(区间下界, 区间上界, 计数)，端点取断点中点。"""
        edges = [float(self.lo)] + [b.midpoint for b in self.breakpoints] + [float(self.hi)]
        return [(edges[k], edges[k + 1], c) for k, c in enumerate(self.counts)]

    @property
    def excluded_ratio(self) -> float:
        total = len(self.samples) + len(self.excluded_samples)
        return len(self.excluded_samples) / total if total else 0.0


def parse_range(text: str) -> tuple[Fraction, Fraction]:
    """解析 `lo:hi`；lo 必须严格小于 hi。"""
    parts = text.split(":")
    if len(parts) != 2:
        raise ConfigError(f"范围格式应为 lo:hi，实际为 {text!r}")
    lo, hi = (rational_from_decimal(p) for p in parts)
    if hi <= lo:
        raise ConfigError(f"范围 [{lo}, {hi}] 退化")
    return lo, hi


def sample_points(lo: Fraction, hi: Fraction, step: Fraction) -> list[Fraction]:
    count = int((hi - lo) // step)
    return [lo + k * step for k in range(count + 1)]


def _certified_count(g: Geometry, r1: Fraction, options: SolverOptions) -> Optional[int]:
    result = cusp_slice(g, r1, options)
    return result.count if result.complete else None


def _count_with_retry(g: Geometry, r1: Fraction, offset: Fraction, options: SolverOptions) -> tuple[Fraction, Optional[int]]:
    count = _certified_count(g, r1, options)
    if count is not None:
        return r1, count
    retry = r1 + offset
    logger.info("r1=%s 认证不完整，扰动到 %s 重试", float(r1), float(retry))
    return retry, _certified_count(g, retry, options)


def _sample_task(args: tuple[Geometry, Fraction, Fraction, SolverOptions]) -> tuple[Fraction, Optional[int]]:
    g, r1, offset, options = args
    return _count_with_retry(g, r1, offset, options)


def _bracket(
    g: Geometry, lo: Fraction, c_lo: int, hi: Fraction, c_hi: int,
    tol: Fraction, options: SolverOptions,
) -> list[Breakpoint]:
    if hi - lo <= tol:
        return [Breakpoint(lo, hi, c_lo, c_hi)]
    mid = (lo + hi) / 2
    point, c_mid = _count_with_retry(g, mid, (hi - lo) / RETRY_DIVISOR, options)
    if c_mid is None or not lo < point < hi:
        logger.warning("区间 (%s, %s) 中点无法认证，停止夹逼", float(lo), float(hi))
        return [Breakpoint(lo, hi, c_lo, c_hi)]
    if c_mid == c_lo:
        return _bracket(g, point, c_mid, hi, c_hi, tol, options)
    if c_mid == c_hi:
        return _bracket(g, lo, c_lo, point, c_mid, tol, options)
    # 区间内不止一个变化点
    return _bracket(g, lo, c_lo, point, c_mid, tol, options) + _bracket(
        g, point, c_mid, hi, c_hi, tol, options
    )


def count_profile(
    g: Geometry,
    lo: Fraction,
    hi: Fraction,
    step: Fraction,
    bracket_tol: Fraction,
    options: Optional[SolverOptions] = None,
) -> CountProfile:
    lo, hi, step, tol = Fraction(lo), Fraction(hi), Fraction(step), Fraction(bracket_tol)
    if step <= 0 or tol <= 0:
        raise ConfigError("step 与 bracket_tol 必须为正")
    if hi <= lo:
        raise ConfigError(f"范围 [{lo}, {hi}] 退化")
    options = options or SolverOptions()
    sample_options = replace(options, threads=1)
    points = sample_points(lo, hi, step)
    tasks = [(g, r1, step / RETRY_DIVISOR, sample_options) for r1 in points]
    logger.info("尖点计数剖面 [%s, %s]：%d 个样本", float(lo), float(hi), len(points))

    if options.threads > 1 and len(tasks) > 1:
        with Pool(processes=options.threads) as pool:
            results = pool.map(_sample_task, tasks)
    else:
        results = [_sample_task(t) for t in tasks]

    samples: list[tuple[Fraction, int]] = []
    excluded: list[float] = []
    for requested, (point, count) in zip(points, results):
        if count is None:
            excluded.append(float(requested))
        else:
            samples.append((point, count))
    if not samples:
        return CountProfile(lo, hi, (), (), tuple(excluded), ())

    breakpoints: list[Breakpoint] = []
    for (a, ca), (b, cb) in zip(samples, samples[1:]):
        if ca != cb:
            breakpoints.extend(_bracket(g, a, ca, b, cb, tol, sample_options))
    counts = [samples[0][1]] + [bp.right_count for bp in breakpoints]
    logger.info("剖面完成：%d 个断点，计数 %s，排除 %d 个样本", len(breakpoints), counts, len(excluded))
    return CountProfile(
        lo=lo,
        hi=hi,
        breakpoints=tuple(breakpoints),
        counts=tuple(counts),
        excluded_samples=tuple(excluded),
        samples=tuple(samples),
    )
