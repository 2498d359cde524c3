"""
有限域 F8 = Z2[t]/(1 + t + t^3) 模块

元素用 3 位整数表示：第 i 位是 t^i 的系数。
"""

import re
from typing import Union

from .base_ring import BaseRing
from ..utils.exceptions import AlgebraError, RingMismatchError

# 1 + t + t^3 的位表示
MODULUS = 0b1011
ORDER = 8


def _carryless_mul(u: int, v: int) -> int:
    """GF(2)[t] 中的乘法后对 1 + t + t^3 取模"""
    product = 0
    while v:
        if v & 1:
            product ^= u
        u <<= 1
        v >>= 1
    for shift in (1, 0):
        if product & (0b1000 << shift):
            product ^= MODULUS << shift
    return product


class F8Element:
    """F8 中的元素，始终是约化后的代表元"""

    __slots__ = ("bits",)

    def __init__(self, bits: int = 0):
        if not 0 <= int(bits) < ORDER:
            raise ValueError(f"F8 元素的位表示必须在 0..7 之间: {bits}")
        self.bits = int(bits)

    @property
    def ring(self) -> "F8Field":
        return F8

    def coefficients(self):
        """(c0, c1, c2)"""
        return tuple((self.bits >> i) & 1 for i in range(3))

    def is_zero(self) -> bool:
        return self.bits == 0

    def _coerce(self, other) -> "F8Element":
        if isinstance(other, F8Element):
            return other
        if isinstance(other, int):
            return F8Element(other & 1)
        if hasattr(other, "ring"):
            raise RingMismatchError(f"不能混合 F8 与 {other.ring.name}")
        return NotImplemented

    def __add__(self, other) -> "F8Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return F8Element(self.bits ^ other.bits)

    __radd__ = __add__
    # 特征 2 中减法就是加法
    __sub__ = __add__
    __rsub__ = __add__

    def __neg__(self) -> "F8Element":
        return self

    def __mul__(self, other) -> "F8Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return F8Element(_carryless_mul(self.bits, other.bits))

    __rmul__ = __mul__

    def inverse(self) -> "F8Element":
        """乘法逆元：非零元素构成 7 阶循环群，所以 u^-1 = u^6"""
        if self.bits == 0:
            raise AlgebraError("F8 中零没有逆元")
        return self ** 6

    def __truediv__(self, other) -> "F8Element":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    def __pow__(self, k: int) -> "F8Element":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = F8Element(1)
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self.bits == (other & 1) if other in (0, 1) else False
        if not isinstance(other, F8Element):
            return NotImplemented
        return self.bits == other.bits

    def __hash__(self) -> int:
        return hash(("F8", self.bits))

    def to_text(self) -> str:
        """规范文本形式 `c0+c1*t+c2*t^2`"""
        c0, c1, c2 = self.coefficients()
        return f"{c0}+{c1}*t+{c2}*t^2"

    def __str__(self) -> str:
        names = ("1", "t", "t^2")
        parts = [name for name, c in zip(names, self.coefficients()) if c]
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"F8Element({self})"


_TERM = re.compile(r"^(?:([01])\*)?(1|t|t\^2|t\^1|t\^0)$|^([01])$")


class F8Field(BaseRing):
    """Z2[t]/(1 + t + t^3)"""

    @property
    def name(self) -> str:
        return "F8"

    @property
    def zero(self) -> F8Element:
        return F8Element(0)

    @property
    def one(self) -> F8Element:
        return F8Element(1)

    @property
    def t(self) -> F8Element:
        return F8Element(0b010)

    def contains(self, element) -> bool:
        return isinstance(element, F8Element)

    def elements(self):
        return [F8Element(bits) for bits in range(ORDER)]

    def from_coefficients(self, c0: int, c1: int = 0, c2: int = 0) -> F8Element:
        return F8Element((c0 & 1) | ((c1 & 1) << 1) | ((c2 & 1) << 2))

    def parse(self, text: str) -> F8Element:
        """
        解析 `c0+c1*t+c2*t^2` 或 `1 + t^2` 形式的文本；系数按模 2 处理

        Args:
            text: 文本

        Returns:
            F8Element
        """
        compact = "".join(text.split())
        if compact == "0":
            return self.zero
        bits = 0
        for term in compact.split("+"):
            match = _TERM.match(term)
            if not match:
                raise ValueError(f"无效的 F8 项: {term!r}")
            if match.group(3) is not None:
                coeff, power = int(match.group(3)), 0
            else:
                coeff = int(match.group(1)) if match.group(1) is not None else 1
                monomial = match.group(2)
                power = {"1": 0, "t^0": 0, "t": 1, "t^1": 1, "t^2": 2}[monomial]
            if coeff:
                bits ^= 1 << power
        return F8Element(bits)

    def is_unit(self, element: F8Element) -> bool:
        return not element.is_zero()


F8 = F8Field()


def f8_arith(u: F8Element, v: Union[F8Element, None], op: str) -> F8Element:
    """
    F8 的加法、乘法和求逆

    Args:
        u: 第一个操作数
        v: 第二个操作数（inv 时忽略）
        op: "add"、"mul" 或 "inv"

    Returns:
        F8Element: 约化后的结果
    """
    if op == "add":
        return u + v
    if op == "mul":
        return u * v
    if op == "inv":
        return u.inverse()
    raise ValueError(f"未知的 F8 运算: {op}")
