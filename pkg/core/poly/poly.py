"""有理系数稀疏多元多项式。

项表为 指数向量 → Fraction，变量表决定指数向量的含义。两个变量表不同的多项式
参与运算时，先对齐到并集（标准变量在前，按 B1x, B1y, tx, ty, r1, r2, r3 排序）。
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Optional, Sequence, Union

from core.errors import PolynomialError
from core.numeric.interval import Interval, Number

STANDARD_VARIABLES: tuple[str, ...] = ("B1x", "B1y", "tx", "ty", "r1", "r2", "r3")

Exponents = tuple[int, ...]
Scalar = Union[int, Fraction]


def canonical_order(names: Iterable[str]) -> tuple[str, ...]:
    unique = set(names)
    standard = [v for v in STANDARD_VARIABLES if v in unique]
    extra = sorted(unique.difference(STANDARD_VARIABLES))
    return tuple(standard + extra)


class Poly:
    """不可变多项式；不存零系数，指数向量长度等于变量表长度。"""

    __slots__ = ("_variables", "_terms", "_hash")

    def __init__(
        self,
        variables: Sequence[str],
        terms: Optional[Mapping[Exponents, Scalar]] = None,
    ) -> None:
        self._variables: tuple[str, ...] = tuple(variables)
        if len(set(self._variables)) != len(self._variables):
            raise PolynomialError(f"变量表有重复: {self._variables}")
        clean: dict[Exponents, Fraction] = {}
        n = len(self._variables)
        for exps, coeff in (terms or {}).items():
            if len(exps) != n:
                raise PolynomialError(f"指数向量 {exps} 与变量表 {self._variables} 长度不一致")
            c = Fraction(coeff)
            if c != 0:
                clean[tuple(exps)] = c
        self._terms = clean
        self._hash: Optional[int] = None

    # 构造
    @classmethod
    def zero(cls, variables: Sequence[str] = ()) -> "Poly":
        return cls(variables)

    @classmethod
    def constant(cls, value: Scalar, variables: Sequence[str] = ()) -> "Poly":
        return cls(variables, {(0,) * len(variables): Fraction(value)})

    @classmethod
    def var(cls, name: str, variables: Optional[Sequence[str]] = None) -> "Poly":
        universe = tuple(variables) if variables is not None else (name,)
        if name not in universe:
            raise PolynomialError(f"变量 {name} 不在变量表 {universe} 中")
        exps = tuple(1 if v == name else 0 for v in universe)
        return cls(universe, {exps: 1})

    # 基本属性
    @property
    def variables(self) -> tuple[str, ...]:
        return self._variables

    @property
    def terms(self) -> dict[Exponents, Fraction]:
        return dict(self._terms)

    def items(self):
        return self._terms.items()

    def is_zero(self) -> bool:
        return not self._terms

    def is_constant(self) -> bool:
        return all(not any(e) for e in self._terms)

    def constant_value(self) -> Fraction:
        if not self.is_constant():
            raise PolynomialError("多项式不是常数")
        return next(iter(self._terms.values()), Fraction(0))

    def total_degree(self) -> int:
        """零多项式的次数约定为 -1。"""
        return max((sum(e) for e in self._terms), default=-1)

    def degree_in(self, name: str) -> int:
        if name not in self._variables:
            return 0
        i = self._variables.index(name)
        return max((e[i] for e in self._terms), default=0)

    def support(self) -> tuple[str, ...]:
        """实际出现（指数非零）的变量。"""
        used = [False] * len(self._variables)
        for exps in self._terms:
            for i, e in enumerate(exps):
                if e:
                    used[i] = True
        return tuple(v for v, u in zip(self._variables, used) if u)

    # 变量表对齐
    def with_variables(self, variables: Sequence[str]) -> "Poly":
        target = tuple(variables)
        if target == self._variables:
            return self
        missing = set(self.support()).difference(target)
        if missing:
            raise PolynomialError(f"目标变量表缺少 {sorted(missing)}")
        index = [self._variables.index(v) if v in self._variables else -1 for v in target]
        terms = {
            tuple(exps[i] if i >= 0 else 0 for i in index): c for exps, c in self._terms.items()
        }
        return Poly(target, terms)

    def _aligned(self, other: "Poly") -> tuple["Poly", "Poly"]:
        if self._variables == other._variables:
            return self, other
        universe = canonical_order(self._variables + other._variables)
        return self.with_variables(universe), other.with_variables(universe)

    def _lift(self, other: Union["Poly", Scalar]) -> "Poly":
        if isinstance(other, Poly):
            return other
        if isinstance(other, (int, Fraction)) and not isinstance(other, bool):
            return Poly.constant(other, self._variables)
        raise PolynomialError(f"不支持与 {type(other).__name__} 运算（请使用精确有理数）")

    # 算术
    def __add__(self, other: Union["Poly", Scalar]) -> "Poly":
        a, b = self._aligned(self._lift(other))
        terms = dict(a._terms)
        for exps, c in b._terms.items():
            terms[exps] = terms.get(exps, Fraction(0)) + c
        return Poly(a._variables, terms)

    __radd__ = __add__

    def __neg__(self) -> "Poly":
        return Poly(self._variables, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: Union["Poly", Scalar]) -> "Poly":
        return self + (-self._lift(other))

    def __rsub__(self, other: Scalar) -> "Poly":
        return self._lift(other) - self

    def scale(self, factor: Scalar) -> "Poly":
        f = Fraction(factor)
        return Poly(self._variables, {e: c * f for e, c in self._terms.items()})

    def __mul__(self, other: Union["Poly", Scalar]) -> "Poly":
        if not isinstance(other, Poly):
            return self.scale(self._lift(other).constant_value())
        a, b = self._aligned(other)
        terms: dict[Exponents, Fraction] = {}
        for ea, ca in a._terms.items():
            for eb, cb in b._terms.items():
                e = tuple(x + y for x, y in zip(ea, eb))
                terms[e] = terms.get(e, Fraction(0)) + ca * cb
        return Poly(a._variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if n < 0:
            raise PolynomialError("仅支持非负整数次幂")
        result = Poly.constant(1, self._variables)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __eq__(self, other: object) -> bool:
        if isinstance(other, (int, Fraction)):
            other = Poly.constant(other, self._variables)
        if not isinstance(other, Poly):
            return NotImplemented
        if self._variables != other._variables:
            try:
                a, b = self._aligned(other)
            except PolynomialError:
                return False
            return a._terms == b._terms
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            trimmed = self.with_variables(canonical_order(self.support()))
            self._hash = hash(frozenset(trimmed._terms.items()))
        return self._hash

    # 代入与求导
    def substitute(self, name: str, value: Scalar) -> "Poly":
        """把变量 name 代入精确值，结果的变量表不再含 name。"""
        if name not in self._variables:
            return self
        i = self._variables.index(name)
        v = Fraction(value)
        remaining = self._variables[:i] + self._variables[i + 1 :]
        terms: dict[Exponents, Fraction] = {}
        for exps, c in self._terms.items():
            e = exps[:i] + exps[i + 1 :]
            terms[e] = terms.get(e, Fraction(0)) + c * v ** exps[i]
        return Poly(remaining, terms)

    def substitute_many(self, values: Mapping[str, Scalar]) -> "Poly":
        result = self
        for name, value in values.items():
            result = result.substitute(name, value)
        return result

    def derivative(self, name: str) -> "Poly":
        if name not in self._variables:
            raise PolynomialError(f"变量 {name} 不在变量表 {self._variables} 中")
        i = self._variables.index(name)
        terms: dict[Exponents, Fraction] = {}
        for exps, c in self._terms.items():
            k = exps[i]
            if k == 0:
                continue
            e = exps[:i] + (k - 1,) + exps[i + 1 :]
            terms[e] = terms.get(e, Fraction(0)) + c * k
        return Poly(self._variables, terms)

    # 求值
    def _values_for(self, point: Mapping[str, object]) -> list:
        needed = self.support()
        missing = [v for v in needed if v not in point]
        if missing:
            raise PolynomialError(f"求值缺少变量 {missing}")
        return [point.get(v, 0) for v in self._variables]

    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """精确有理求值。"""
        values = [Fraction(x) for x in self._values_for(point)]
        total = Fraction(0)
        for exps, c in self._terms.items():
            term = c
            for x, e in zip(values, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def evaluate_float(self, point: Mapping[str, float]) -> float:
        values = [float(x) for x in self._values_for(point)]  # type: ignore[arg-type]
        total = 0.0
        for exps, c in self._terms.items():
            term = float(c)
            for x, e in zip(values, exps):
                if e:
                    term *= x**e
            total += term
        return total

    def evaluate_interval_naive(self, box: Mapping[str, Interval]) -> Interval:
        """逐单项求和的参考实现。"""
        values = self._values_for(box)
        ivs = [v if isinstance(v, Interval) else Interval.point(v) for v in values]  # type: ignore[arg-type]
        total = Interval(0.0, 0.0)
        for exps, c in self._terms.items():
            term = Interval.from_rational(c)
            for x, e in zip(ivs, exps):
                if e:
                    term = term * (x**e)
            total = total + term
        return total

    def evaluate_interval(self, box: Mapping[str, Interval]) -> Interval:
        """按变量逐层 Horner 嵌套求值，通常比逐单项求和更紧。"""
        support = canonical_order(self.support())
        compiled = compile_poly(self.with_variables(support), support)
        return compiled.eval_interval([box[v] for v in support])

    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for exps, c in sorted_terms(self):
            mono = "*".join(
                f"{v}^{e}" if e > 1 else v for v, e in zip(self._variables, exps) if e
            )
            parts.append(f"{c}*{mono}" if mono else f"{c}")
        return " + ".join(parts)


def sorted_terms(p: Poly) -> list[tuple[Exponents, Fraction]]:
    """分次字典序（总次数降序，再按指数向量字典序降序）。"""
    return sorted(p.items(), key=lambda item: (-sum(item[0]), tuple(-e for e in item[0])))


class CompiledPoly:
    """针对固定未知量顺序预编译的嵌套 Horner 结构，供求解器热路径使用。

    叶子存放系数的外包区间与浮点值；第 k 层节点是 (次数, 子节点) 的降序列表。
    """

    __slots__ = ("unknowns", "_tree", "degree")

    def __init__(self, unknowns: tuple[str, ...], tree, degree: int) -> None:
        self.unknowns = unknowns
        self._tree = tree
        self.degree = degree

    def eval_interval(self, xs: Sequence[Interval]) -> Interval:
        return _eval_node_interval(self._tree, 0, xs)

    def eval_float(self, xs: Sequence[float]) -> float:
        return _eval_node_float(self._tree, 0, xs)

    def __getstate__(self):
        return (self.unknowns, self._tree, self.degree)

    def __setstate__(self, state) -> None:
        self.unknowns, self._tree, self.degree = state


_ZERO_LEAF = (Interval(0.0, 0.0), 0.0)


def _build_node(terms: list[tuple[Exponents, Fraction]], k: int, n: int):
    if k == n:
        total = sum((c for _, c in terms), Fraction(0))
        return (Interval.from_rational(total), float(total))
    groups: dict[int, list[tuple[Exponents, Fraction]]] = {}
    for exps, c in terms:
        groups.setdefault(exps[k], []).append((exps, c))
    return [(d, _build_node(groups[d], k + 1, n)) for d in sorted(groups, reverse=True)]


def _eval_node_interval(node, k: int, xs: Sequence[Interval]) -> Interval:
    if isinstance(node, tuple):
        return node[0]
    x = xs[k]
    deg, child = node[0]
    acc = _eval_node_interval(child, k + 1, xs)
    for next_deg, next_child in node[1:]:
        acc = acc * (x ** (deg - next_deg)) + _eval_node_interval(next_child, k + 1, xs)
        deg = next_deg
    if deg:
        acc = acc * (x**deg)
    return acc


def _eval_node_float(node, k: int, xs: Sequence[float]) -> float:
    if isinstance(node, tuple):
        return node[1]
    x = xs[k]
    deg, child = node[0]
    acc = _eval_node_float(child, k + 1, xs)
    for next_deg, next_child in node[1:]:
        acc = acc * x ** (deg - next_deg) + _eval_node_float(next_child, k + 1, xs)
        deg = next_deg
    if deg:
        acc = acc * x**deg
    return acc


def compile_poly(p: Poly, unknowns: Sequence[str]) -> CompiledPoly:
    """按 unknowns 顺序编译；p 的支撑变量必须全部属于 unknowns。"""
    order = tuple(unknowns)
    extra = set(p.support()).difference(order)
    if extra:
        raise PolynomialError(f"多项式含未代入的变量 {sorted(extra)}")
    aligned = p.with_variables(order)
    terms = list(aligned.items())
    if not terms:
        return CompiledPoly(order, _ZERO_LEAF, -1)
    return CompiledPoly(order, _build_node(terms, 0, len(order)), aligned.total_degree())


def point_intervals(values: Sequence[Number]) -> list[Interval]:
    return [Interval.point(v) for v in values]
