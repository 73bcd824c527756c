"""项目异常层级。

认证不完整（存在未解决盒子）不是异常，而是 SolveReport 中的值。
"""

from __future__ import annotations


class AtlasError(Exception):
    """所有库内异常的基类。"""


class DecimalParseError(AtlasError, ValueError):
    """十进制/有理数文本无法精确解析。"""


class IntervalDomainError(AtlasError, ZeroDivisionError):
    """区间除法的除数区间包含 0。"""


class GeometryError(AtlasError, ValueError):
    """几何参数非法（三角不等式不成立、边长非正等）。"""


class PolynomialError(AtlasError, ValueError):
    """多项式运算的输入不合法（非方阵行列式、未知变量等）。"""


class SolverError(AtlasError):
    """求解器输入不合法（参数未代入、未知数维度不匹配等）。"""


class ConfigError(AtlasError):
    """命令行或配置文件错误，对应退出码 1。"""
