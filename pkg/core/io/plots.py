"""奇异曲线切片的 SVG 图：横轴 ρ2、纵轴 ρ3，折线为奇异曲线，圆圈为尖点。"""

from __future__ import annotations

from pathlib import Path
from typing import Sequence

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

# 固定 SVG 内部 id，输出可逐字节复现
matplotlib.rcParams["svg.hashsalt"] = "rpr-cusp-atlas"
matplotlib.rcParams["svg.fonttype"] = "none"


def write_slice_svg(
    path: Path,
    polylines: Sequence[Sequence[tuple[float, float]]],
    cusps: Sequence[tuple[float, float]],
    r1_text: str,
    bounds: tuple[float, float],
    crossings: Sequence[tuple[float, float]] = (),
) -> Path:
    path.parent.mkdir(parents=True, exist_ok=True)
    fig, ax = plt.subplots(figsize=(6, 6))
    try:
        for k, line in enumerate(polylines):
            xs = [p[0] for p in line]
            ys = [p[1] for p in line]
            (artist,) = ax.plot(xs, ys, color="black", linewidth=0.8)
            artist.set_gid(f"polyline-{k}")
        if crossings:
            ax.plot(
                [p[0] for p in crossings], [p[1] for p in crossings],
                linestyle="none", marker="+", color="tab:blue", markersize=5,
            )
        if cusps:
            markers = ax.scatter(
                [c[0] for c in cusps], [c[1] for c in cusps],
                s=60, facecolors="none", edgecolors="tab:red", linewidths=1.2, zorder=3,
            )
            # 每个尖点对应 <g id="cusps"> 下的一个 <use> 元素
            markers.set_gid("cusps")
        lo, hi = bounds
        ax.set_xlim(lo, hi)
        ax.set_ylim(lo, hi)
        ax.set_aspect("equal")
        ax.set_xlabel("ρ2")
        ax.set_ylabel("ρ3")
        ax.set_title(f"ρ1 = {r1_text}")
        fig.savefig(path, format="svg", metadata={"Date": None})
    finally:
        plt.close(fig)
    return path
