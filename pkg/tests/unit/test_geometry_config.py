"""
Unit tests for models/geometry.py 与 core/model/geometry_io.py

- GeometryConfig 字段与键集合校验
- 预设与 YAML 文件载入
- --dump-config 输出的精确往返
"""

from fractions import Fraction
from pathlib import Path

import pytest
import yaml
from pydantic import ValidationError

from core.errors import ConfigError, GeometryError
from core.model.geometry import Geometry, benchmark_geometry, fig4_geometry
from core.model.geometry_io import dump_geometry_config, load_geometry, parse_geometry_mapping
from models.geometry import GeometryConfig

CONFIG_DIR = Path(__file__).resolve().parents[2] / "config"

BASE = {"A2x": "15.91", "A3x": "0", "A3y": "10", "d1": "17.04", "d3": "20.84"}


class TestGeometryConfig:
    """配置模型校验"""

    def test_sides_variant(self):
        cfg = GeometryConfig.model_validate(BASE | {"d2": "16.54", "beta_sign": -1})
        assert cfg.exact("d2") == Fraction(1654, 100)
        assert cfg.beta_sign == -1

    def test_numbers_are_read_from_their_text(self):
        cfg = GeometryConfig.model_validate(BASE | {"A2x": 15.91, "d2": 16.54})
        assert cfg.exact("A2x") == Fraction(1591, 100)

    def test_both_variants_rejected(self):
        with pytest.raises(ValidationError):
            GeometryConfig.model_validate(BASE | {"d2": "16.54", "beta_degrees": "37"})

    def test_neither_variant_rejected(self):
        with pytest.raises(ValidationError):
            GeometryConfig.model_validate(BASE)

    def test_sign_with_angle_rejected(self):
        with pytest.raises(ValidationError):
            GeometryConfig.model_validate(BASE | {"beta_degrees": "37", "beta_sign": 1})

    def test_bad_sign_rejected(self):
        with pytest.raises(ValidationError):
            GeometryConfig.model_validate(BASE | {"d2": "16.54", "beta_sign": 2})

    def test_malformed_decimal_rejected(self):
        with pytest.raises(ValidationError):
            GeometryConfig.model_validate(BASE | {"d2": "1e3"})

    def test_unknown_key_rejected(self):
        with pytest.raises(ValidationError):
            GeometryConfig.model_validate(BASE | {"d2": "16.54", "A4x": "1"})

    def test_betax_requires_betay(self):
        with pytest.raises(ValidationError):
            GeometryConfig.model_validate(BASE | {"d2": "16.54", "betax": "0.6"})

    def test_exact_variant(self):
        """只给出单位圆点 (betax, betay) 的精确给法"""
        cfg = GeometryConfig.model_validate(BASE | {"betax": "5/13", "betay": "12/13"})
        assert cfg.is_exact_only
        assert cfg.exact("betay") == Fraction(12, 13)

    def test_sign_with_exact_rejected(self):
        with pytest.raises(ValidationError):
            GeometryConfig.model_validate(BASE | {"betax": "5/13", "betay": "12/13", "beta_sign": 1})


class TestLoadGeometry:
    """几何载入"""

    def test_preset(self):
        assert load_geometry("preset:benchmark") == benchmark_geometry(1)
        assert load_geometry("preset:fig4-") == fig4_geometry(-1)

    def test_preset_uses_tolerance(self):
        """预设同样按给定容差有理化 β"""
        fine = load_geometry("preset:benchmark")
        coarse = load_geometry("preset:benchmark", tol=Fraction(1, 100))
        assert coarse == benchmark_geometry(1, Fraction(1, 100))
        assert coarse.betax != fine.betax
        assert abs(coarse.betax - fine.betax) <= Fraction(1, 50)

    def test_unknown_preset(self):
        with pytest.raises(ConfigError):
            load_geometry("preset:nope")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            load_geometry(tmp_path / "missing.yaml")

    def test_shipped_files_match_presets(self):
        assert load_geometry(CONFIG_DIR / "benchmark.yaml") == benchmark_geometry(1)
        assert load_geometry(CONFIG_DIR / "fig4_positive.yaml") == fig4_geometry(1)
        assert load_geometry(CONFIG_DIR / "fig4_negative.yaml") == fig4_geometry(-1)

    def test_invalid_mapping(self):
        with pytest.raises(ConfigError):
            parse_geometry_mapping(["not", "a", "mapping"])
        with pytest.raises(ConfigError):
            parse_geometry_mapping(BASE)

    def test_invalid_yaml(self, tmp_path):
        path = tmp_path / "broken.yaml"
        path.write_text("A2x: [1,\n", encoding="utf-8")
        with pytest.raises(ConfigError):
            load_geometry(path)

    def test_degenerate_triangle(self):
        with pytest.raises(GeometryError):
            parse_geometry_mapping(BASE | {"d1": "1", "d2": "3", "d3": "1"})


class TestDumpConfig:
    """精确往返"""

    @pytest.mark.parametrize("factory", [lambda: benchmark_geometry(1), lambda: benchmark_geometry(-1), lambda: fig4_geometry(1)])
    def test_round_trip_is_exact(self, factory, tmp_path):
        g = factory()
        path = tmp_path / "geometry.yaml"
        path.write_text(dump_geometry_config(g), encoding="utf-8")
        assert load_geometry(path) == g

    def test_exact_override_sign_checked(self):
        g = benchmark_geometry(1)
        data = yaml.safe_load(dump_geometry_config(g))
        data["betay"] = "-" + data["betay"]
        with pytest.raises(GeometryError):
            parse_geometry_mapping(data)

    def test_scaled_geometry_round_trip(self, tmp_path):
        g = benchmark_geometry(1).scaled(Fraction(1, 2))
        path = tmp_path / "half.yaml"
        path.write_text(dump_geometry_config(g), encoding="utf-8")
        assert load_geometry(path) == g

    def test_exact_geometry_round_trip(self, tmp_path):
        """没有 d2 与 beta_degrees 的几何按 betax/betay 写出并精确读回"""
        g = Geometry.from_exact(
            A2x=Fraction(6), A3x=Fraction(-4), A3y=Fraction(8), d1=Fraction(5), d3=Fraction(5),
            betax=Fraction(5, 13), betay=Fraction(12, 13), name="exact",
        )
        data = yaml.safe_load(dump_geometry_config(g))
        assert data["betax"] == "5/13"
        assert "d2" not in data and "beta_degrees" not in data
        path = tmp_path / "exact.yaml"
        path.write_text(dump_geometry_config(g), encoding="utf-8")
        assert load_geometry(path) == g
