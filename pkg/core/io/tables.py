"""CSV 输出。浮点统一用 %.12g，行序由调用方保证为规范顺序，结果逐字节可复现。"""

from __future__ import annotations

import csv
from pathlib import Path
from typing import Any, Iterable, Sequence

from core.atlas.cusps import SliceResult
from core.atlas.kinematics import AssemblyMode
from core.atlas.profile import CountProfile
from core.model.kinematics import JointLengths
from core.numeric.box import Box
from core.numeric.rational import format_rational

FLOAT_FORMAT = "%.12g"

CUSP_HEADER = ("r1", "r2", "r3", "B1x", "B1y", "tx", "ty", "box_width")
DK_HEADER = ("B1x", "B1y", "tx", "ty", "det_j", "box_width")
PROFILE_HEADER = ("interval_lo", "interval_hi", "count")
BREAKPOINT_HEADER = ("bracket_lo", "bracket_hi", "midpoint", "left_count", "right_count")
POLYLINE_HEADER = ("segment_id", "r2", "r3")
IK_HEADER = ("r1", "r2", "r3")


def fmt(value: Any) -> str:
    if isinstance(value, float):
        return FLOAT_FORMAT % value
    return str(value)


def write_rows(path: Path, header: Sequence[str], rows: Iterable[Sequence[Any]]) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    with path.open("w", encoding="utf-8", newline="") as fh:
        writer = csv.writer(fh, lineterminator="\n")
        writer.writerow(header)
        for row in rows:
            writer.writerow([fmt(v) for v in row])
    return path


def cusp_filename(r1_text: str) -> str:
    return f"cusps_r1={r1_text}.csv"


def write_cusps(path: Path, result: SliceResult) -> Path:
    rows = []
    for cusp, root in zip(result.cusps, result.report.roots):
        j, p = cusp.joints, cusp.pose
        rows.append((float(j.r1), float(j.r2), float(j.r3), p.B1x, p.B1y, p.tx, p.ty, root.width))
    return write_rows(path, CUSP_HEADER, rows)


def write_dk(path: Path, modes: Sequence[AssemblyMode]) -> Path:
    rows = [(m.pose.B1x, m.pose.B1y, m.pose.tx, m.pose.ty, m.det_j, m.box_width) for m in modes]
    return write_rows(path, DK_HEADER, rows)


def write_unresolved(path: Path, boxes: Sequence[Box]) -> Path:
    """未解决盒：每个变量一对 lo/hi 列。"""
    names = boxes[0].names if boxes else ()
    header = [f"{n}_{side}" for n in names for side in ("lo", "hi")]
    rows = [[v for iv in box.intervals for v in (iv.lo, iv.hi)] for box in boxes]
    return write_rows(path, header, rows)


def write_profile(path: Path, profile: CountProfile) -> Path:
    return write_rows(path, PROFILE_HEADER, profile.intervals())


def write_breakpoints(path: Path, profile: CountProfile) -> Path:
    rows = [
        (float(b.lo), float(b.hi), b.midpoint, b.left_count, b.right_count)
        for b in profile.breakpoints
    ]
    return write_rows(path, BREAKPOINT_HEADER, rows)


def write_excluded(path: Path, profile: CountProfile) -> Path:
    return write_rows(path, ("r1",), [(r,) for r in profile.excluded_samples])


def write_polylines(path: Path, polylines: Sequence[Sequence[tuple[float, float]]]) -> Path:
    rows = [(k, r2, r3) for k, line in enumerate(polylines) for r2, r3 in line]
    return write_rows(path, POLYLINE_HEADER, rows)


def write_ik(path: Path, joints: JointLengths) -> Path:
    return write_rows(path, IK_HEADER, [tuple(float(r) for r in joints.as_tuple())])


def r1_label(r1) -> str:
    """文件名中的 r1 文本（精确十进制或 p/q）。"""
    return format_rational(r1)
