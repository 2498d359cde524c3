"""
代数模块：Laurent 多项式、F8 以及 skein 系数方案
"""

from .base_ring import BaseRing
from .laurent import LaurentRing, LaurentPoly
from .field8 import F8, F8Element, F8Field, f8_arith
from .scheme import (
    BAR_MAPPING,
    COEFFICIENT_NAMES,
    SYMBOLIC_RING,
    CoefficientScheme,
    bar,
    make_scheme,
)


def laurent_arith(p: LaurentPoly, q: LaurentPoly, op: str) -> LaurentPoly:
    """
    Laurent 多项式的加、减、乘

    Args:
        p: 左操作数
        q: 右操作数
        op: "add"、"sub" 或 "mul"

    Returns:
        LaurentPoly: 规范形式的结果
    """
    if op == "add":
        return p + q
    if op == "sub":
        return p - q
    if op == "mul":
        return p * q
    raise ValueError(f"未知的 Laurent 运算: {op}")


def monomial_pow(m: LaurentPoly, k: int) -> LaurentPoly:
    """单项式的整数次幂，k 可以为负"""
    return m ** k


def substitute(p: LaurentPoly, mapping, ring=None):
    """变量代换，见 LaurentPoly.substitute"""
    return p.substitute(mapping, ring)
