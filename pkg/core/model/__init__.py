"""3-RPR 机构模型：几何、方程组构造与逆运动学。"""

from core.model.geometry import PRESETS, Geometry, beta_from_degrees, beta_from_sides, benchmark_geometry
from core.model.geometry_io import dump_geometry_config, load_geometry, parse_geometry_mapping
from core.model.kinematics import Configuration, JointLengths, Pose, inverse_kinematics
from core.model.systems import (
    CUSP_UNKNOWNS,
    POSE_VARIABLES,
    build_constraints,
    build_cusp_system,
    build_dk_system,
    build_singular_section_system,
    build_singular_system,
)

__all__ = [
    "CUSP_UNKNOWNS",
    "POSE_VARIABLES",
    "PRESETS",
    "Configuration",
    "Geometry",
    "JointLengths",
    "Pose",
    "benchmark_geometry",
    "beta_from_degrees",
    "beta_from_sides",
    "build_constraints",
    "build_cusp_system",
    "build_dk_system",
    "build_singular_section_system",
    "build_singular_system",
    "dump_geometry_config",
    "inverse_kinematics",
    "load_geometry",
    "parse_geometry_mapping",
]
