"""子命令处理上下文。"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import Any

from core.errors import ConfigError
from core.model.geometry import Geometry
from core.numeric.rational import rational_from_decimal
from core.solver.report import SolverOptions
from models.run import RunConfig

logger = logging.getLogger(__name__)


@dataclass
class HandlerContext:
    """子命令处理器共享上下文。"""

    config: RunConfig
    geometry: Geometry
    options: SolverOptions
    out_dir: Path
    outputs: list[str] = field(default_factory=list)

    def param(self, name: str, default: Any = None) -> Any:
        return self.config.parameters.get(name, default)

    def exact(self, name: str) -> Fraction:
        """按十进制文本精确读入参数。"""
        value = self.param(name)
        if value is None:
            raise ConfigError(f"缺少参数 --{name.replace('_', '-')}")
        return rational_from_decimal(str(value))

    def output_path(self, name: str) -> Path:
        return self.out_dir / name

    def record_output(self, path: Path) -> Path:
        rel = path.relative_to(self.out_dir).as_posix()
        if rel not in self.outputs:
            self.outputs.append(rel)
        logger.info("写出 %s", path)
        return path
