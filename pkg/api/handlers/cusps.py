"""cusps：单个 ρ1 切片上的尖点构型。"""

from __future__ import annotations

import logging

from api.handlers.base import EXIT_INCOMPLETE, EXIT_OK, CommandHandler, HandlerResult
from api.handlers.context import HandlerContext
from core.atlas.cusps import cusp_slice
from core.io.tables import cusp_filename, r1_label, write_cusps, write_unresolved
from core.model.systems import build_cusp_system

logger = logging.getLogger(__name__)


class CuspsHandler(CommandHandler):
    def handle(self, context: HandlerContext) -> HandlerResult:
        r1 = context.exact("r1")
        result = cusp_slice(context.geometry, r1, context.options)
        label = r1_label(r1)
        context.record_output(write_cusps(context.output_path(cusp_filename(label)), result))

        exit_code = EXIT_OK
        if not result.complete:
            context.record_output(
                write_unresolved(
                    context.output_path(f"cusps_r1={label}_unresolved.csv"), result.report.unresolved
                )
            )
            logger.warning("r1=%s 尖点认证不完整（可能位于计数变化点附近）", label)
            exit_code = EXIT_INCOMPLETE
        return HandlerResult(
            exit_code=exit_code,
            stats=result.report.stats,
            degrees=list(build_cusp_system(context.geometry).degrees()),
        )
