"""几何配置文件的数据模型。"""

from __future__ import annotations

from fractions import Fraction
from typing import Any, Optional

from pydantic import BaseModel, ConfigDict, Field, field_validator, model_validator

from core.numeric.rational import parse_rational

_EXACT_FIELDS = ("A2x", "A3x", "A3y", "d1", "d2", "d3", "beta_degrees", "betax", "betay")


class GeometryConfig(BaseModel):
    """几何配置（YAML 映射）；数值以十进制或 p/q 文本精确读入"""

    model_config = ConfigDict(extra="forbid", populate_by_name=True)

    name: str = Field(default="custom", description="几何名称")
    A2x: str = Field(..., description="A2 的 x 坐标")
    A3x: str = Field(..., description="A3 的 x 坐标")
    A3y: str = Field(..., description="A3 的 y 坐标")
    d1: str = Field(..., description="平台边 B1B2 长度")
    d3: str = Field(..., description="平台边 B1B3 长度")
    d2: Optional[str] = Field(default=None, description="平台边 B2B3 长度（三边给法）")
    beta_sign: Optional[int] = Field(default=None, description="β 的方向：+1 逆时针，-1 顺时针")
    beta_degrees: Optional[str] = Field(default=None, description="β 角度（角度给法）")
    betax: Optional[str] = Field(default=None, description="精确 cos β（由 --dump-config 写出）")
    betay: Optional[str] = Field(default=None, description="精确 sin β（由 --dump-config 写出）")

    @field_validator(*_EXACT_FIELDS, mode="before")
    @classmethod
    def _normalize_number(cls, value: Any) -> Any:
        # YAML 浮点按其最短文本读回
        if isinstance(value, bool):
            raise ValueError("不接受布尔值")
        if isinstance(value, (int, float)):
            return repr(value)
        return value

    @field_validator(*_EXACT_FIELDS)
    @classmethod
    def _check_exact(cls, value: Optional[str]) -> Optional[str]:
        if value is not None:
            parse_rational(value)
        return value

    @field_validator("beta_sign")
    @classmethod
    def _check_sign(cls, value: Optional[int]) -> Optional[int]:
        if value is not None and value not in (1, -1):
            raise ValueError("beta_sign 只能为 1 或 -1")
        return value

    @model_validator(mode="after")
    def _check_key_set(self) -> "GeometryConfig":
        by_sides = self.d2 is not None
        by_angle = self.beta_degrees is not None
        if (self.betax is None) != (self.betay is None):
            raise ValueError("betax 与 betay 必须同时给出")
        if by_sides and by_angle:
            raise ValueError("d2（三边）与 beta_degrees（角度）只能给出其一")
        if not by_sides and not by_angle and self.betax is None:
            raise ValueError("必须给出 d2（三边）、beta_degrees（角度）或 betax/betay（精确）之一")
        if not by_sides and self.beta_sign is not None:
            raise ValueError("beta_sign 只用于三边给法，其余给法的符号由 beta_degrees 或 betay 决定")
        return self

    @property
    def is_exact_only(self) -> bool:
        """只给出精确单位圆点 (betax, betay)。"""
        return self.d2 is None and self.beta_degrees is None

    def exact(self, key: str) -> Optional[Fraction]:
        value = getattr(self, key)
        return None if value is None else parse_rational(value)
