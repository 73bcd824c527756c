"""profile：尖点计数随 ρ1 的剖面与计数变化点。"""

from __future__ import annotations

import logging

from api.handlers.base import EXIT_INCOMPLETE, EXIT_OK, CommandHandler, HandlerResult
from api.handlers.context import HandlerContext
from core.atlas.profile import count_profile, parse_range
from core.io.tables import write_breakpoints, write_excluded, write_profile
from core.model.systems import build_cusp_system

logger = logging.getLogger(__name__)

# 排除样本占比超过该值时视为认证不完整
MAX_EXCLUDED_RATIO = 0.05


class ProfileHandler(CommandHandler):
    def handle(self, context: HandlerContext) -> HandlerResult:
        lo, hi = parse_range(str(context.param("range", "")))
        profile = count_profile(
            context.geometry, lo, hi, context.exact("step"), context.exact("tol"), context.options
        )
        context.record_output(write_profile(context.output_path("profile.csv"), profile))
        context.record_output(write_breakpoints(context.output_path("breakpoints.csv"), profile))
        context.record_output(write_excluded(context.output_path("excluded.csv"), profile))

        exit_code = EXIT_OK
        if profile.excluded_ratio > MAX_EXCLUDED_RATIO:
            logger.warning("排除样本占比 %.1f%% 超过 5%%", 100 * profile.excluded_ratio)
            exit_code = EXIT_INCOMPLETE
        return HandlerResult(
            exit_code=exit_code,
            degrees=list(build_cusp_system(context.geometry).degrees()),
        )
