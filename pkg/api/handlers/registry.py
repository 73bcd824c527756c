"""子命令处理器注册表。"""

from typing import Optional

from api.handlers.base import CommandHandler
from api.handlers.cusps import CuspsHandler
from api.handlers.dk import DirectKinematicsHandler
from api.handlers.ik import InverseKinematicsHandler
from api.handlers.profile import ProfileHandler
from api.handlers.slice import SliceHandler

COMMAND_HANDLERS: dict[str, CommandHandler] = {
    "dk": DirectKinematicsHandler(),
    "cusps": CuspsHandler(),
    "slice": SliceHandler(),
    "profile": ProfileHandler(),
    "ik": InverseKinematicsHandler(),
}


def get_handler(command: str) -> Optional[CommandHandler]:
    """根据子命令名获取处理器。"""
    return COMMAND_HANDLERS.get(command)
