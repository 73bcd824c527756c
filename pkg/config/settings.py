"""应用配置，求解器/图谱/命令行默认值集中于此，可按环境变量覆盖。"""

from __future__ import annotations

from typing import Optional

from pydantic import Field
from pydantic_settings import BaseSettings, SettingsConfigDict


class Settings(BaseSettings):
    """全局配置（环境变量前缀 RPR_）"""

    # 求解器配置
    min_width: float = Field(default=1e-9, gt=0, description="归一化最小盒宽，低于此值不再二分")
    max_depth: int = Field(default=64, gt=0, description="二分最大深度")
    max_boxes: int = Field(default=400_000, gt=0, description="单次求解处理盒子数上限")
    krawczyk_width: float = Field(default=0.125, gt=0, le=1, description="归一化宽度低于此值时尝试 Krawczyk")
    refine_steps: int = Field(default=30, ge=0, description="认证后收缩迭代次数")
    split_depth: int = Field(default=3, ge=0, le=8, description="初始盒预切分层数（决定并行子树）")

    # 几何配置
    beta_tol: str = Field(default="0.000000000001", description="β 有理化容差（十进制字符串，精确读入）")

    # 图谱配置
    profile_step: float = Field(default=0.02, gt=0)
    bracket_tol: float = Field(default=5e-3, gt=0)
    grid_size: int = Field(default=256, ge=2)
    slice_max: float = Field(default=35.0, gt=0)

    # 运行配置
    threads: int = Field(default=1, ge=1)
    output_dir: str = "out"

    # 日志配置
    log_level: str = "INFO"
    log_file: Optional[str] = None

    model_config = SettingsConfigDict(
        env_prefix="RPR_",
        env_file=".env",
        env_file_encoding="utf-8",
        extra="ignore",
    )


settings = Settings()
