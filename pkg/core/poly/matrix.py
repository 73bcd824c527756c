"""多项式矩阵：雅可比矩阵、行列式（带记忆化的余子式展开）与子式。"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, Sequence

import numpy as np

from core.errors import PolynomialError
from core.poly.poly import Poly

MAX_DET_DIMENSION = 6


def bareiss_det(rows: Sequence[Sequence[Fraction]]) -> Fraction:
    """无分数消元（Bareiss）求有理方阵的精确行列式。"""
    n = len(rows)
    if any(len(r) != n for r in rows):
        raise PolynomialError("行列式要求方阵")
    if n == 0:
        return Fraction(1)
    # 逐行通分为整数矩阵
    scale = Fraction(1)
    m: list[list[int]] = []
    for r in rows:
        den = math.lcm(*(Fraction(x).denominator for x in r))
        m.append([int(Fraction(x) * den) for x in r])
        scale /= den
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return Fraction(0)
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) // prev
        prev = m[k][k]
    return sign * m[n - 1][n - 1] * scale


@dataclass(frozen=True)
class PolyMatrix:
    """rows × cols 的多项式矩阵（矩形）。"""

    rows: tuple[tuple[Poly, ...], ...]

    def __post_init__(self) -> None:
        if self.rows and len({len(r) for r in self.rows}) != 1:
            raise PolynomialError("矩阵各行长度必须一致")

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[Poly]]) -> "PolyMatrix":
        return cls(tuple(tuple(r) for r in rows))

    @classmethod
    def from_constants(cls, rows: Sequence[Sequence[int | Fraction]], variables: Sequence[str] = ()) -> "PolyMatrix":
        return cls(tuple(tuple(Poly.constant(x, variables) for x in r) for r in rows))

    @property
    def shape(self) -> tuple[int, int]:
        return (len(self.rows), len(self.rows[0]) if self.rows else 0)

    def __getitem__(self, index: tuple[int, int]) -> Poly:
        i, j = index
        return self.rows[i][j]

    def is_constant(self) -> bool:
        return all(p.is_constant() for r in self.rows for p in r)

    def submatrix(self, rows: Sequence[int], cols: Sequence[int]) -> "PolyMatrix":
        return PolyMatrix(tuple(tuple(self.rows[i][j] for j in cols) for i in rows))

    def det(self) -> Poly:
        n_rows, n_cols = self.shape
        if n_rows != n_cols:
            raise PolynomialError(f"行列式要求方阵，实际为 {n_rows}×{n_cols}")
        if n_rows > MAX_DET_DIMENSION:
            raise PolynomialError(f"余子式展开仅支持不超过 {MAX_DET_DIMENSION} 阶")
        if n_rows == 0:
            return Poly.constant(1)
        if self.is_constant():
            value = bareiss_det([[p.constant_value() for p in r] for r in self.rows])
            return Poly.constant(value, self.rows[0][0].variables)
        return _cofactor_det(self.rows)

    def minors(self, k: int) -> list[Poly]:
        """全部 k 阶子式，按行子集、再按列子集的字典序排列。"""
        n_rows, n_cols = self.shape
        if not 0 < k <= min(n_rows, n_cols):
            raise PolynomialError(f"子式阶数 {k} 超出 {n_rows}×{n_cols}")
        return [
            self.submatrix(rs, cs).det()
            for rs in itertools.combinations(range(n_rows), k)
            for cs in itertools.combinations(range(n_cols), k)
        ]

    def evaluate_float(self, point: Mapping[str, float]) -> np.ndarray:
        return np.array([[p.evaluate_float(point) for p in r] for r in self.rows], dtype=float)


def _cofactor_det(rows: tuple[tuple[Poly, ...], ...]) -> Poly:
    """沿行展开；子行列式按 (起始行, 剩余列集合) 记忆化。"""
    n = len(rows)
    memo: dict[tuple[int, tuple[int, ...]], Poly] = {}

    def minor(start: int, cols: tuple[int, ...]) -> Poly:
        if start == n - 1:
            return rows[start][cols[0]]
        key = (start, cols)
        cached = memo.get(key)
        if cached is not None:
            return cached
        total: Poly | None = None
        for pos, c in enumerate(cols):
            entry = rows[start][c]
            if entry.is_zero():
                continue
            rest = cols[:pos] + cols[pos + 1 :]
            term = entry * minor(start + 1, rest)
            if pos % 2:
                term = -term
            total = term if total is None else total + term
        if total is None:
            total = Poly.zero(rows[0][0].variables)
        memo[key] = total
        return total

    return minor(0, tuple(range(n)))
