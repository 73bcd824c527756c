"""精确有理数：以 fractions.Fraction 为载体，负责十进制常量的无损读入与输出。"""

from __future__ import annotations

import re
from fractions import Fraction
from math import isqrt
from typing import Union

from core.errors import DecimalParseError

Rational = Fraction

RationalLike = Union[Fraction, int, str]

_DECIMAL_RE = re.compile(r"^\s*([+-]?)(\d+(?:\.\d*)?|\.\d+)\s*$")
_RATIO_RE = re.compile(r"^\s*([+-]?\d+)\s*/\s*(\d+)\s*$")


def rational_from_decimal(text: str) -> Fraction:
    """把有限十进制字符串精确转换为有理数。

    仅接受可选符号 + 数字 + 可选小数部分（如 "15.91"、"-0.5"、".537"），
    指数记法、分数、nan/inf 一律视为格式错误。
    """
    if not isinstance(text, str):
        raise DecimalParseError(f"期望十进制字符串，实际为 {type(text).__name__}")
    match = _DECIMAL_RE.match(text)
    if match is None:
        raise DecimalParseError(f"非法十进制数: {text!r}")
    sign, body = match.groups()
    if "." in body:
        whole, frac = body.split(".", 1)
    else:
        whole, frac = body, ""
    numerator = int((whole or "0") + frac)
    value = Fraction(numerator, 10 ** len(frac))
    return -value if sign == "-" else value


def parse_rational(value: RationalLike) -> Fraction:
    """读入十进制或 "p/q" 形式；整数与 Fraction 原样接受。"""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise DecimalParseError("布尔值不是数值")
    if isinstance(value, int):
        return Fraction(value)
    if not isinstance(value, str):
        raise DecimalParseError(f"无法精确读入 {type(value).__name__}，请使用字符串")
    ratio = _RATIO_RE.match(value)
    if ratio is not None:
        num, den = int(ratio.group(1)), int(ratio.group(2))
        if den == 0:
            raise DecimalParseError(f"分母为零: {value!r}")
        return Fraction(num, den)
    return rational_from_decimal(value)


def _is_terminating(q: Fraction) -> bool:
    den = q.denominator
    for p in (2, 5):
        while den % p == 0:
            den //= p
    return den == 1


def format_rational(q: Fraction) -> str:
    """输出可被 parse_rational 无损读回的文本：有限小数优先，否则 p/q。"""
    if q.denominator == 1:
        return str(q.numerator)
    if not _is_terminating(q):
        return f"{q.numerator}/{q.denominator}"
    sign = "-" if q < 0 else ""
    q = abs(q)
    digits = 0
    scaled = q
    while scaled.denominator != 1:
        scaled *= 10
        digits += 1
    text = str(scaled.numerator).rjust(digits + 1, "0")
    return f"{sign}{text[:-digits]}.{text[-digits:]}"


def rational_sqrt_bounds(q: Fraction, bits: int = 60) -> tuple[Fraction, Fraction]:
    """返回 [lo, hi]，满足 lo ≤ √q ≤ hi 且 hi − lo = 2^-bits。"""
    if q < 0:
        raise DecimalParseError(f"负数没有实平方根: {q}")
    if q == 0:
        return Fraction(0), Fraction(0)
    scale = 1 << (2 * bits)
    root = isqrt(q.numerator * scale // q.denominator)
    lo = Fraction(root, 1 << bits)
    hi = Fraction(root + 1, 1 << bits)
    return lo, hi
