"""关节空间分析：正运动学、奇异曲线切片、尖点枚举与计数剖面。"""

from core.atlas.cusps import SliceResult, cusp_signature, cusp_slice, singular_residuals, singular_section
from core.atlas.kinematics import (
    AssemblyMode,
    assembly_modes,
    direct_kinematics,
    pose_box_for,
    search_box_for,
)
from core.atlas.profile import Breakpoint, CountProfile, count_profile, parse_range
from core.atlas.slice import SingularSlice, singular_slice

__all__ = [
    "AssemblyMode",
    "Breakpoint",
    "CountProfile",
    "SingularSlice",
    "SliceResult",
    "assembly_modes",
    "count_profile",
    "cusp_signature",
    "cusp_slice",
    "direct_kinematics",
    "parse_range",
    "pose_box_for",
    "search_box_for",
    "singular_residuals",
    "singular_section",
    "singular_slice",
]
