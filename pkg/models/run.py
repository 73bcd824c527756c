"""命令行运行配置与运行清单的数据模型。"""

from typing import Any, Literal, Optional

from pydantic import BaseModel, Field

from models.solve import SolveStats

Command = Literal["dk", "cusps", "slice", "profile", "ik"]


class RunConfig(BaseModel):
    """一次命令行运行的完整配置（命令行参数覆盖 Settings 后的结果）"""

    command: Command = Field(..., description="子命令")
    geometry: str = Field(..., description="几何文件路径或 preset:<name>")
    output_dir: str = Field(..., description="输出目录")
    threads: int = Field(default=1, ge=1, description="工作进程数上限")
    min_width: float = Field(..., gt=0, description="归一化最小盒宽")
    max_depth: int = Field(..., gt=0, description="二分最大深度")
    verbose: bool = Field(default=False)
    dump_system: bool = Field(default=False, description="写出方程组文本转储")
    dump_config: bool = Field(default=False, description="写出精确几何配置")
    # 子命令参数，按命令行原文保存（十进制文本精确读入）
    parameters: dict[str, Any] = Field(default_factory=dict, description="子命令参数")


class RunManifest(BaseModel):
    """run_manifest.json：复现一次运行所需的全部信息（不含耗时）"""

    tool: str = Field(default="rpr-cusp-atlas")
    version: str = Field(..., description="工具版本")
    command: Command
    arguments: dict[str, Any] = Field(default_factory=dict, description="命令行参数")
    settings: dict[str, Any] = Field(default_factory=dict, description="生效的求解器设置")
    geometry: dict[str, Any] = Field(default_factory=dict, description="精确几何参数")
    d2_perturbation: Optional[float] = Field(default=None, description="β 有理化引起的 d2 扰动")
    degrees: Optional[list[int]] = Field(default=None, description="方程组次数")
    outputs: list[str] = Field(default_factory=list, description="输出文件（相对输出目录）")
    stats: Optional[SolveStats] = Field(default=None, description="求解统计汇总")
    exit_code: int = Field(default=0)
