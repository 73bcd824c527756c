"""在规则网格上提取符号变化的等值线（marching squares），并连接成折线。

节点值为 NaN 表示未定义，+inf 是合法的正号哨兵。
一条网格边上若两端均有定义且符号不同，或两端的整数标签（正运动学解数）不同，
则该边上有一个交点。
"""

from __future__ import annotations

from collections import defaultdict
from typing import Optional, Sequence

import numpy as np

# 边键: (方向, i, j)；"h" 连接 (i, j)-(i+1, j)，"v" 连接 (i, j)-(i, j+1)
EdgeKey = tuple[str, int, int]
Point = tuple[float, float]


def _defined(v: float) -> bool:
    return not np.isnan(v)


def _edge_crossing(a: float, b: float, la: int, lb: int) -> Optional[float]:
    """返回交点在边上的参数 t ∈ [0, 1]；无交点返回 None。"""
    if not (_defined(a) and _defined(b)) or la < 0 or lb < 0:
        return None
    sign_change = (a > 0) != (b > 0)
    if not sign_change and la == lb:
        return None
    if sign_change and np.isfinite(a) and np.isfinite(b) and a != b:
        return float(min(max(a / (a - b), 0.0), 1.0))
    return 0.5


def find_crossings(values: np.ndarray, labels: Optional[np.ndarray] = None) -> dict[EdgeKey, float]:
    nx, ny = values.shape
    if labels is None:
        labels = np.zeros(values.shape, dtype=int)
    crossings: dict[EdgeKey, float] = {}
    for i in range(nx):
        for j in range(ny):
            if i + 1 < nx:
                t = _edge_crossing(values[i, j], values[i + 1, j], labels[i, j], labels[i + 1, j])
                if t is not None:
                    crossings[("h", i, j)] = t
            if j + 1 < ny:
                t = _edge_crossing(values[i, j], values[i, j + 1], labels[i, j], labels[i, j + 1])
                if t is not None:
                    crossings[("v", i, j)] = t
    return crossings


def _cell_segments(values: np.ndarray, crossings: dict[EdgeKey, float], i: int, j: int) -> list[tuple[EdgeKey, EdgeKey]]:
    bottom, right, top, left = ("h", i, j), ("v", i + 1, j), ("h", i, j + 1), ("v", i, j)
    hits = [e for e in (bottom, right, top, left) if e in crossings]
    if len(hits) < 2:
        return []
    if len(hits) == 4:
        corners = [values[i, j], values[i + 1, j], values[i + 1, j + 1], values[i, j + 1]]
        finite = [c for c in corners if np.isfinite(c)]
        center = float(np.mean(finite)) if len(finite) == 4 else 1.0
        if (center > 0) == (corners[0] > 0):
            # 左下与右上经中心相连，切开右下角与左上角
            return [(bottom, right), (top, left)]
        return [(left, bottom), (right, top)]
    # 两个交点，或标签变化带来的三个交点（只连前两个）
    return [(hits[0], hits[1])]


def _link(segments: Sequence[tuple[EdgeKey, EdgeKey]]) -> list[list[EdgeKey]]:
    graph: dict[EdgeKey, list[EdgeKey]] = defaultdict(list)
    for a, b in segments:
        graph[a].append(b)
        graph[b].append(a)
    visited_edges: set[frozenset[EdgeKey]] = set()
    chains: list[list[EdgeKey]] = []

    def walk(start: EdgeKey) -> list[EdgeKey]:
        chain = [start]
        current = start
        while True:
            nxt = None
            for cand in sorted(graph[current]):
                key = frozenset((current, cand))
                if key not in visited_edges:
                    visited_edges.add(key)
                    nxt = cand
                    break
            if nxt is None:
                return chain
            chain.append(nxt)
            current = nxt

    nodes = sorted(graph)
    # 先走开链端点，再走闭环
    for node in nodes:
        if len(graph[node]) == 1 and any(frozenset((node, n)) not in visited_edges for n in graph[node]):
            chains.append(walk(node))
    for node in nodes:
        if any(frozenset((node, n)) not in visited_edges for n in graph[node]):
            chains.append(walk(node))
    return chains


def extract_polylines(
    xs: Sequence[float],
    ys: Sequence[float],
    values: np.ndarray,
    labels: Optional[np.ndarray] = None,
) -> list[list[Point]]:
    """values[i, j] 是 (xs[i], ys[j]) 处的节点值；返回按确定顺序排列的折线。"""
    values = np.asarray(values, dtype=float)
    nx, ny = values.shape
    if nx < 2 or ny < 2 or len(xs) != nx or len(ys) != ny:
        raise ValueError("网格至少为 2×2，且坐标长度须与节点数一致")
    crossings = find_crossings(values, labels)
    segments: list[tuple[EdgeKey, EdgeKey]] = []
    for i in range(nx - 1):
        for j in range(ny - 1):
            segments.extend(_cell_segments(values, crossings, i, j))

    def locate(edge: EdgeKey) -> Point:
        kind, i, j = edge
        t = crossings[edge]
        if kind == "h":
            return (xs[i] + t * (xs[i + 1] - xs[i]), float(ys[j]))
        return (float(xs[i]), ys[j] + t * (ys[j + 1] - ys[j]))

    return [[locate(e) for e in chain] for chain in _link(segments)]
