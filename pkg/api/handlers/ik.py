"""ik：由位姿求杆长。"""

from __future__ import annotations

from api.handlers.base import EXIT_OK, CommandHandler, HandlerResult
from api.handlers.context import HandlerContext
from core.errors import ConfigError
from core.io.tables import write_ik
from core.model.kinematics import Pose, inverse_kinematics


class InverseKinematicsHandler(CommandHandler):
    def handle(self, context: HandlerContext) -> HandlerResult:
        b1x = float(context.exact("B1x"))
        b1y = float(context.exact("B1y"))
        if context.param("alpha_degrees") is not None:
            if context.param("tx") is not None or context.param("ty") is not None:
                raise ConfigError("--alpha-degrees 与 --tx/--ty 只能给出一种")
            pose = Pose.from_angle(b1x, b1y, float(context.exact("alpha_degrees")))
        else:
            pose = Pose(b1x, b1y, float(context.exact("tx")), float(context.exact("ty")))
        joints = inverse_kinematics(context.geometry, pose)
        context.record_output(write_ik(context.output_path("ik.csv"), joints))
        return HandlerResult(exit_code=EXIT_OK)
