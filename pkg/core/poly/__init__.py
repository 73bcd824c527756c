"""有理系数多元多项式代数。"""

from core.poly.matrix import PolyMatrix, bareiss_det
from core.poly.poly import STANDARD_VARIABLES, CompiledPoly, Poly, compile_poly
from core.poly.system import CompiledSystem, PolySystem, jacobian

__all__ = [
    "STANDARD_VARIABLES",
    "CompiledPoly",
    "CompiledSystem",
    "Poly",
    "PolyMatrix",
    "PolySystem",
    "bareiss_det",
    "compile_poly",
    "jacobian",
]
