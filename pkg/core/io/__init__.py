"""文件输出：CSV 数据、SVG 图与运行清单。"""

from core.io.manifest import MANIFEST_NAME, read_manifest, write_manifest
from core.io.plots import write_slice_svg
from core.io.tables import (
    write_breakpoints,
    write_cusps,
    write_dk,
    write_excluded,
    write_ik,
    write_polylines,
    write_profile,
    write_unresolved,
)

__all__ = [
    "MANIFEST_NAME",
    "read_manifest",
    "write_breakpoints",
    "write_cusps",
    "write_dk",
    "write_excluded",
    "write_ik",
    "write_manifest",
    "write_polylines",
    "write_profile",
    "write_slice_svg",
    "write_unresolved",
]
