"""几何的读入与转储：YAML 文件、预设名与 --dump-config 输出。

三种给法：三边（d2 + beta_sign）、角度（beta_degrees）、精确单位圆点（只给 betax/betay）。
前两种可再附 betax/betay 覆盖有理化结果。
"""

from __future__ import annotations

import logging
from pathlib import Path
from typing import Any, Union

import yaml
from pydantic import ValidationError

from core.errors import ConfigError, GeometryError
from core.model.geometry import DEFAULT_BETA_TOL, PRESETS, Geometry
from models.geometry import GeometryConfig

logger = logging.getLogger(__name__)

PRESET_PREFIX = "preset:"


def _derived_geometry(cfg: GeometryConfig, tol) -> Geometry:
    exact = cfg.exact
    if cfg.d2 is not None:
        return Geometry.from_sides(
            A2x=exact("A2x"), A3x=exact("A3x"), A3y=exact("A3y"),
            d1=exact("d1"), d2=exact("d2"), d3=exact("d3"),
            beta_sign=cfg.beta_sign or 1, tol=tol, name=cfg.name,
        )
    return Geometry.from_angle(
        A2x=exact("A2x"), A3x=exact("A3x"), A3y=exact("A3y"),
        d1=exact("d1"), d3=exact("d3"), beta_degrees=exact("beta_degrees"),
        tol=tol, name=cfg.name,
    )


def geometry_from_config(cfg: GeometryConfig, tol=DEFAULT_BETA_TOL) -> Geometry:
    exact = cfg.exact
    if cfg.is_exact_only:
        return Geometry.from_exact(
            A2x=exact("A2x"), A3x=exact("A3x"), A3y=exact("A3y"),
            d1=exact("d1"), d3=exact("d3"), betax=exact("betax"), betay=exact("betay"),
            name=cfg.name,
        )
    g = _derived_geometry(cfg, tol)
    if cfg.betax is None:
        return g
    betax, betay = exact("betax"), exact("betay")
    if betay * g.betay < 0:
        raise GeometryError("betay 的符号与 beta_sign/beta_degrees 不一致")
    # 精确值覆盖推导值（Geometry 构造时检查单位圆）
    return Geometry(
        A2x=g.A2x, A3x=g.A3x, A3y=g.A3y, d1=g.d1, d3=g.d3,
        betax=betax, betay=betay,
        d2_reconstructed=g.d1 * g.d1 + g.d3 * g.d3 - 2 * g.d1 * g.d3 * betax,
        d2=g.d2, beta_degrees=g.beta_degrees, name=g.name,
    )


def parse_geometry_mapping(data: Any, tol=DEFAULT_BETA_TOL) -> Geometry:
    if not isinstance(data, dict):
        raise ConfigError("几何配置必须是键值映射")
    try:
        cfg = GeometryConfig.model_validate(data)
    except ValidationError as exc:
        raise ConfigError(f"几何配置无效: {exc.errors()[0]['msg']}") from exc
    return geometry_from_config(cfg, tol)


def load_geometry(source: Union[str, Path], tol=DEFAULT_BETA_TOL) -> Geometry:
    """按文件路径或 `preset:<name>` 载入几何；tol 对预设与文件同样生效。"""
    text = str(source)
    if text.startswith(PRESET_PREFIX):
        name = text[len(PRESET_PREFIX):]
        factory = PRESETS.get(name)
        if factory is None:
            raise ConfigError(f"未知几何预设 {name!r}，可选: {sorted(PRESETS)}")
        return factory(tol)
    path = Path(text)
    if not path.is_file():
        raise FileNotFoundError(f"几何文件不存在: {path}")
    with path.open("r", encoding="utf-8") as fh:
        try:
            data = yaml.safe_load(fh)
        except yaml.YAMLError as exc:
            raise ConfigError(f"无法解析 YAML {path}: {exc}") from exc
    g = parse_geometry_mapping(data, tol)
    logger.info("载入几何 %s（%s）", g.name, path)
    return g


def geometry_to_mapping(g: Geometry) -> dict[str, Any]:
    """与 GeometryConfig 对应的精确文本映射；没有 d2 与 beta_degrees 时只写 betax/betay。"""
    data: dict[str, Any] = {"name": g.name}
    data.update(g.describe())
    if "beta_sign" in data:
        data["beta_sign"] = int(data["beta_sign"])
    return data


def dump_geometry_config(g: Geometry) -> str:
    return yaml.safe_dump(geometry_to_mapping(g), sort_keys=False, allow_unicode=True)
