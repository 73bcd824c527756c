"""多项式文本转储格式，供 --dump-system 与黄金测试使用。

每项一行：`coeff * B1x^a B1y^b tx^c ty^d r1^e r2^f r3^g`，项按分次字典序排列。
"""

from __future__ import annotations

from core.poly.poly import STANDARD_VARIABLES, Poly, canonical_order, sorted_terms
from core.poly.system import PolySystem


def dump_poly(p: Poly) -> list[str]:
    universe = canonical_order(STANDARD_VARIABLES + p.variables)
    full = p.with_variables(universe)
    lines = []
    for exps, coeff in sorted_terms(full):
        mono = " ".join(f"{v}^{e}" for v, e in zip(universe, exps))
        lines.append(f"{coeff} * {mono}")
    return lines


def dump_system(system: PolySystem) -> str:
    degrees = ",".join(str(d) for d in system.degrees())
    header = [
        f"# system: {system.name}",
        f"# equations: {len(system)}",
        f"# unknowns: {' '.join(system.unknowns)}",
        f"# parameters: {' '.join(system.parameters)}",
        f"# degrees: {degrees}",
    ]
    body: list[str] = []
    for label, eq in zip(system.labels, system.equations):
        body.append(f"## {label} degree={eq.total_degree()} terms={len(eq.terms)}")
        body.extend(dump_poly(eq))
    return "\n".join(header + body) + "\n"
