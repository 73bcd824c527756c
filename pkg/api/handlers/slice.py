"""slice：奇异曲线切片（CSV 折线 + SVG 图，叠加尖点）。"""

from __future__ import annotations

import logging
from fractions import Fraction

from api.handlers.base import EXIT_INCOMPLETE, EXIT_OK, CommandHandler, HandlerResult
from api.handlers.context import HandlerContext
from core.atlas.cusps import cusp_slice, singular_section
from core.atlas.slice import singular_slice
from core.errors import ConfigError
from core.io.plots import write_slice_svg
from core.io.tables import cusp_filename, r1_label, write_cusps, write_polylines
from core.model.systems import build_cusp_system

logger = logging.getLogger(__name__)

# 认证失败节点占比上限
MAX_FAILURE_RATIO = 0.01


class SliceHandler(CommandHandler):
    def handle(self, context: HandlerContext) -> HandlerResult:
        g = context.geometry
        r1 = context.exact("r1")
        grid = int(context.param("grid"))
        if grid < 2:
            raise ConfigError(f"--grid 至少为 2，实际为 {grid}")
        lo, hi = context.exact("min"), context.exact("max")
        label = r1_label(r1)

        section = singular_slice(g, r1, grid, lo, hi, context.options)
        cusps = cusp_slice(g, r1, context.options)
        crossings = self._sections(context, r1, lo, hi)

        context.record_output(
            write_polylines(context.output_path(f"polylines_r1={label}.csv"), section.polylines)
        )
        context.record_output(write_cusps(context.output_path(cusp_filename(label)), cusps))
        context.record_output(
            write_slice_svg(
                context.output_path(f"slice_r1={label}.svg"),
                section.polylines,
                [(float(c.joints.r2), float(c.joints.r3)) for c in cusps.cusps],
                label,
                (float(lo), float(hi)),
                crossings,
            )
        )

        exit_code = EXIT_OK
        if section.failure_ratio > MAX_FAILURE_RATIO:
            logger.warning("网格认证失败占比 %.2f%% 超过 1%%", 100 * section.failure_ratio)
            exit_code = EXIT_INCOMPLETE
        if not cusps.complete:
            logger.warning("r1=%s 尖点认证不完整", label)
            exit_code = EXIT_INCOMPLETE
        return HandlerResult(
            exit_code=exit_code,
            degrees=list(build_cusp_system(g).degrees()),
        )

    @staticmethod
    def _sections(
        context: HandlerContext, r1: Fraction, lo: Fraction, hi: Fraction
    ) -> list[tuple[float, float]]:
        """在等距竖线 ρ2 = const 上认证奇异曲线交点，用于叠加显示。"""
        count = int(context.param("sections", 0) or 0)
        points: list[tuple[float, float]] = []
        for k in range(1, count + 1):
            r2 = lo + (hi - lo) * k / (count + 1)
            report = singular_section(context.geometry, r1, r2, context.options)
            points.extend((float(r2), root.value("r3")) for root in report.roots)
        return points
