"""多项式方程组：有序方程列表 + 未知量/参数划分。"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Mapping, Optional, Sequence

from core.errors import PolynomialError
from core.poly.matrix import PolyMatrix
from core.poly.poly import CompiledPoly, Poly, Scalar, canonical_order, compile_poly


@dataclass(frozen=True)
class PolySystem:
    """方程组；每个出现的变量都必须声明为未知量或参数。"""

    equations: tuple[Poly, ...]
    unknowns: tuple[str, ...]
    parameters: tuple[str, ...] = ()
    labels: tuple[str, ...] = field(default=())
    name: str = "system"

    def __post_init__(self) -> None:
        declared = set(self.unknowns) | set(self.parameters)
        if len(declared) != len(self.unknowns) + len(self.parameters):
            raise PolynomialError("未知量与参数不能重名")
        for i, eq in enumerate(self.equations):
            undeclared = set(eq.support()).difference(declared)
            if undeclared:
                raise PolynomialError(f"第 {i + 1} 个方程含未声明变量 {sorted(undeclared)}")
        if not self.labels:
            object.__setattr__(self, "labels", tuple(f"F{i + 1}" for i in range(len(self.equations))))
        elif len(self.labels) != len(self.equations):
            raise PolynomialError("方程标签数量与方程数量不一致")

    def __len__(self) -> int:
        return len(self.equations)

    @property
    def is_square(self) -> bool:
        return len(self.equations) == len(self.unknowns)

    def degrees(self) -> tuple[int, ...]:
        return tuple(eq.total_degree() for eq in self.equations)

    def substitute(self, values: Mapping[str, Scalar]) -> "PolySystem":
        """代入参数值；被代入的参数从参数表中移除。"""
        unknown = set(values).difference(self.parameters)
        if unknown:
            raise PolynomialError(f"只能代入参数，{sorted(unknown)} 不是参数")
        exact = {k: Fraction(v) for k, v in values.items()}
        return PolySystem(
            equations=tuple(eq.substitute_many(exact) for eq in self.equations),
            unknowns=self.unknowns,
            parameters=tuple(p for p in self.parameters if p not in exact),
            labels=self.labels,
            name=self.name,
        )

    def select(self, indices: Sequence[int]) -> "PolySystem":
        return PolySystem(
            equations=tuple(self.equations[i] for i in indices),
            unknowns=self.unknowns,
            parameters=self.parameters,
            labels=tuple(self.labels[i] for i in indices),
            name=self.name,
        )

    def jacobian(self, variables: Optional[Sequence[str]] = None) -> PolyMatrix:
        return jacobian(self, variables if variables is not None else self.unknowns)

    def evaluate_float(self, point: Mapping[str, float]) -> list[float]:
        return [eq.evaluate_float(point) for eq in self.equations]

    def compile(self) -> "CompiledSystem":
        if self.parameters:
            raise PolynomialError(f"编译前必须代入全部参数，剩余 {self.parameters}")
        return CompiledSystem.build(self)


def jacobian(system: PolySystem, variables: Sequence[str]) -> PolyMatrix:
    """(i, j) 元为 ∂F_i/∂variables_j。"""
    if not variables:
        raise PolynomialError("雅可比矩阵至少需要一个变量")
    universe = canonical_order(
        [v for eq in system.equations for v in eq.variables] + list(variables)
    )
    rows = []
    for eq in system.equations:
        full = eq.with_variables(universe)
        rows.append(tuple(full.derivative(v) for v in variables))
    return PolyMatrix.from_rows(rows)


@dataclass(frozen=True)
class CompiledSystem:
    """求解器用：方程与其对未知量的偏导数，均按未知量顺序预编译。"""

    unknowns: tuple[str, ...]
    labels: tuple[str, ...]
    equations: tuple[CompiledPoly, ...]
    gradients: tuple[tuple[CompiledPoly, ...], ...]
    degrees: tuple[int, ...]

    @classmethod
    def build(cls, system: PolySystem) -> "CompiledSystem":
        jac = system.jacobian()
        return cls(
            unknowns=system.unknowns,
            labels=system.labels,
            equations=tuple(compile_poly(eq, system.unknowns) for eq in system.equations),
            gradients=tuple(
                tuple(compile_poly(jac[i, j], system.unknowns) for j in range(len(system.unknowns)))
                for i in range(len(system.equations))
            ),
            degrees=system.degrees(),
        )

    def __len__(self) -> int:
        return len(self.equations)
