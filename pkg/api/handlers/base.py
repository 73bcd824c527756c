"""子命令处理器协议定义。"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Protocol

from api.handlers.context import HandlerContext
from models.solve import SolveStats

EXIT_OK = 0
EXIT_CONFIG_ERROR = 1
EXIT_INCOMPLETE = 2


@dataclass
class HandlerResult:
    """处理结果：退出码与写入清单的附加信息。"""

    exit_code: int = EXIT_OK
    stats: Optional[SolveStats] = None
    degrees: Optional[list[int]] = None


class CommandHandler(Protocol):
    """子命令处理器接口。"""

    def handle(self, context: HandlerContext) -> HandlerResult:
        """
        执行子命令，输出文件通过 context.record_output 登记。
        """
        ...
