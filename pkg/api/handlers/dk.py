"""dk：给定杆长的认证正运动学。"""

from __future__ import annotations

import logging

from api.handlers.base import EXIT_INCOMPLETE, EXIT_OK, CommandHandler, HandlerResult
from api.handlers.context import HandlerContext
from core.atlas.kinematics import assembly_modes, direct_kinematics
from core.io.tables import write_dk, write_unresolved
from core.model.kinematics import JointLengths
from core.model.systems import build_constraints

logger = logging.getLogger(__name__)


class DirectKinematicsHandler(CommandHandler):
    def handle(self, context: HandlerContext) -> HandlerResult:
        joints = JointLengths(context.exact("r1"), context.exact("r2"), context.exact("r3"))
        report = direct_kinematics(context.geometry, joints, context.options)
        modes = assembly_modes(context.geometry, report)
        context.record_output(write_dk(context.output_path("dk.csv"), modes))

        exit_code = EXIT_OK
        if report.unresolved:
            context.record_output(
                write_unresolved(context.output_path("dk_unresolved.csv"), report.unresolved)
            )
            logger.warning(
                "正运动学认证不完整：%d 个装配模式，%d 个未解决盒（奇异或近奇异杆长）",
                len(modes), len(report.unresolved),
            )
            exit_code = EXIT_INCOMPLETE
        return HandlerResult(
            exit_code=exit_code,
            stats=report.stats,
            degrees=list(build_constraints(context.geometry).degrees()),
        )
