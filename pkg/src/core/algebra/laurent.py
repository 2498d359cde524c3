"""
Laurent 多项式模块，提供整数系数多元 Laurent 多项式的精确运算

变量集合在环实例构造时固定，例如 (a, b, n, w, e)、(x, y) 或 (A,)。
"""

import cmath
from numbers import Number
from typing import Dict, Iterable, Mapping, Optional, Sequence, Tuple, Union

from .base_ring import BaseRing
from ..utils.exceptions import AlgebraError, RingMismatchError

Exponent = Tuple[int, ...]


class LaurentRing(BaseRing):
    """整数系数 Laurent 多项式环 Z[v1^±1, ..., vk^±1]"""

    def __init__(self, variables: Sequence[str]):
        """
        初始化环

        Args:
            variables: 变量名序列，顺序决定指数向量的坐标顺序
        """
        variables = tuple(variables)
        if len(set(variables)) != len(variables):
            raise ValueError(f"变量名重复: {variables}")
        for var in variables:
            if not var.isidentifier():
                raise ValueError(f"非法变量名: {var!r}")
        self.variables = variables
        self._index = {var: i for i, var in enumerate(variables)}

    @property
    def name(self) -> str:
        return "Z[" + ",".join(f"{v}^±1" for v in self.variables) + "]"

    @property
    def zero(self) -> "LaurentPoly":
        return LaurentPoly(self, {})

    @property
    def one(self) -> "LaurentPoly":
        return self.constant(1)

    @property
    def arity(self) -> int:
        return len(self.variables)

    def contains(self, element) -> bool:
        return isinstance(element, LaurentPoly) and element.ring == self

    def constant(self, value: int) -> "LaurentPoly":
        """整数常数多项式"""
        return LaurentPoly(self, {(0,) * self.arity: int(value)})

    def gen(self, var: str) -> "LaurentPoly":
        """单个变量作为多项式"""
        return self.monomial(1, {var: 1})

    def gens(self) -> Tuple["LaurentPoly", ...]:
        return tuple(self.gen(v) for v in self.variables)

    def monomial(self, coefficient: int, exponents: Union[Mapping[str, int], Sequence[int]]) -> "LaurentPoly":
        """
        构造单项式

        Args:
            coefficient: 整数系数
            exponents: 变量名到指数的映射，或按变量顺序给出的指数向量

        Returns:
            LaurentPoly: 单项式
        """
        if isinstance(exponents, Mapping):
            vector = [0] * self.arity
            for var, power in exponents.items():
                vector[self.index_of(var)] += int(power)
            key = tuple(vector)
        else:
            key = tuple(int(p) for p in exponents)
            if len(key) != self.arity:
                raise ValueError(f"指数向量长度应为 {self.arity}: {key}")
        return LaurentPoly(self, {key: int(coefficient)})

    def index_of(self, var: str) -> int:
        try:
            return self._index[var]
        except KeyError:
            raise RingMismatchError(f"变量 {var!r} 不属于环 {self.name}") from None

    def parse(self, text: str) -> "LaurentPoly":
        """
        解析文本形式，支持规范形式 `-1*a^1*b^-1 + -1*a^-1*b^1`
        以及常见的简写形式 `-A^5 - A^-3 + 2`。
        """
        return _parse_laurent(self, text)

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentRing) and other.variables == self.variables

    def __hash__(self) -> int:
        return hash(("LaurentRing", self.variables))


class LaurentPoly:
    """
    不可变的 Laurent 多项式：指数向量到非零整数系数的映射。
    相等性是结构相等（规范形式唯一）。
    """

    __slots__ = ("ring", "_terms", "_hash")

    def __init__(self, ring: LaurentRing, terms: Mapping[Exponent, int]):
        self.ring = ring
        self._terms: Dict[Exponent, int] = {k: v for k, v in terms.items() if v != 0}
        self._hash: Optional[int] = None

    # --- 基本属性 ---

    def terms(self) -> Iterable[Tuple[Exponent, int]]:
        """按指数向量字典序降序给出 (指数向量, 系数)"""
        return sorted(self._terms.items(), reverse=True)

    def coefficient(self, exponents: Union[Mapping[str, int], Sequence[int]]) -> int:
        key = next(iter(self.ring.monomial(1, exponents)._terms))
        return self._terms.get(key, 0)

    def is_zero(self) -> bool:
        return not self._terms

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def is_constant(self) -> bool:
        return self.is_zero() or (self.is_monomial() and not any(next(iter(self._terms))))

    def __len__(self) -> int:
        return len(self._terms)

    def degree_range(self, var: str) -> Tuple[int, int]:
        """某个变量的最低和最高指数；零多项式返回 (0, 0)"""
        if self.is_zero():
            return (0, 0)
        i = self.ring.index_of(var)
        powers = [exp[i] for exp in self._terms]
        return (min(powers), max(powers))

    # --- 运算 ---

    def _coerce(self, other) -> "LaurentPoly":
        if isinstance(other, LaurentPoly):
            if other.ring != self.ring:
                raise RingMismatchError(f"不能混合 {self.ring.name} 与 {other.ring.name}")
            return other
        if isinstance(other, int):
            return self.ring.constant(other)
        return NotImplemented

    def __add__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        result = dict(self._terms)
        for exp, coeff in other._terms.items():
            result[exp] = result.get(exp, 0) + coeff
        return LaurentPoly(self.ring, result)

    __radd__ = __add__

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(self.ring, {exp: -coeff for exp, coeff in self._terms.items()})

    def __sub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return other - self

    def __mul__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        if len(other._terms) == 1:
            (oexp, ocoeff), = other._terms.items()
            return LaurentPoly(self.ring, {
                tuple(a + b for a, b in zip(exp, oexp)): coeff * ocoeff
                for exp, coeff in self._terms.items()
            })
        result: Dict[Exponent, int] = {}
        for exp1, c1 in self._terms.items():
            for exp2, c2 in other._terms.items():
                key = tuple(a + b for a, b in zip(exp1, exp2))
                result[key] = result.get(key, 0) + c1 * c2
        return LaurentPoly(self.ring, result)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "LaurentPoly":
        if not isinstance(k, int):
            return NotImplemented
        if k < 0:
            return self.inverse() ** (-k)
        result = self.ring.one
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def inverse(self) -> "LaurentPoly":
        """单项式的逆；系数必须是 ±1"""
        if not self.is_monomial():
            raise AlgebraError(f"非单项式没有 Laurent 逆: {self}")
        (exp, coeff), = self._terms.items()
        if coeff not in (1, -1):
            raise AlgebraError(f"系数 {coeff} 在整数中不可逆: {self}")
        return LaurentPoly(self.ring, {tuple(-p for p in exp): coeff})

    def __truediv__(self, other) -> "LaurentPoly":
        other = self._coerce(other)
        if other is NotImplemented:
            return NotImplemented
        return self * other.inverse()

    # --- 代换 ---

    def substitute(self, mapping: Mapping[str, Union[str, Number]],
                   ring: Optional[LaurentRing] = None) -> Union["LaurentPoly", complex]:
        """
        代换变量

        符号模式：mapping 的值都是变量名，结果在 ring（默认本环）中，
        未映射的变量保持原名。数值模式：mapping 给出每个变量的数值，返回复数。

        Args:
            mapping: 变量名到变量名或数值的映射
            ring: 符号模式下的目标环

        Returns:
            LaurentPoly 或 complex
        """
        values = list(mapping.values())
        if values and all(isinstance(v, str) for v in values):
            return self._rename(mapping, ring or self.ring)
        if not all(isinstance(v, Number) for v in values):
            raise ValueError("代换映射必须全部是变量名或全部是数值")
        return self._evaluate(mapping)

    def _rename(self, mapping: Mapping[str, str], target: LaurentRing) -> "LaurentPoly":
        if target == self.ring and sorted(mapping.values()) != sorted(mapping.keys()):
            raise ValueError(f"同一环内的符号代换必须是变量的置换: {dict(mapping)}")
        result: Dict[Exponent, int] = {}
        for exp, coeff in self._terms.items():
            vector = [0] * target.arity
            for var, power in zip(self.ring.variables, exp):
                if power == 0:
                    continue
                vector[target.index_of(mapping.get(var, var))] += power
            key = tuple(vector)
            result[key] = result.get(key, 0) + coeff
        return LaurentPoly(target, result)

    def _evaluate(self, mapping: Mapping[str, Number]) -> complex:
        missing = [v for v in self.ring.variables if v not in mapping]
        used = {v for exp in self._terms for v, p in zip(self.ring.variables, exp) if p}
        if used & set(missing):
            raise ValueError(f"数值代换缺少变量: {sorted(used & set(missing))}")
        total = 0j
        for exp, coeff in self._terms.items():
            term = complex(coeff)
            for var, power in zip(self.ring.variables, exp):
                if power == 0:
                    continue
                value = complex(mapping[var])
                if value == 0 and power < 0:
                    raise AlgebraError(f"不能把 0 代入 {var} 的负指数")
                term *= value ** power
            total += term
        return total

    def evaluate_at(self, **values: Number) -> complex:
        return self._evaluate(values)

    # --- 比较与输出 ---

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            other = self.ring.constant(other)
        if not isinstance(other, LaurentPoly):
            return NotImplemented
        return self.ring == other.ring and self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash((self.ring, frozenset(self._terms.items())))
        return self._hash

    def to_text(self) -> str:
        """规范文本形式，例如 `-1*a^1*b^-1 + -1*a^-1*b^1`"""
        if self.is_zero():
            return "0"
        parts = []
        for exp, coeff in self.terms():
            factors = [str(coeff)]
            factors += [f"{var}^{p}" for var, p in zip(self.ring.variables, exp) if p]
            parts.append("*".join(factors))
        return " + ".join(parts)

    def __str__(self) -> str:
        if self.is_zero():
            return "0"
        out = []
        for exp, coeff in self.terms():
            mono = "*".join(
                var if p == 1 else f"{var}^{p}"
                for var, p in zip(self.ring.variables, exp) if p
            )
            magnitude = abs(coeff)
            if not mono:
                body = str(magnitude)
            elif magnitude == 1:
                body = mono
            else:
                body = f"{magnitude}*{mono}"
            if not out:
                out.append(("-" if coeff < 0 else "") + body)
            else:
                out.append(("- " if coeff < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"LaurentPoly({self.to_text()!r})"

    def to_sympy(self):
        """转换为 sympy 表达式，变量用同名 Symbol"""
        import sympy

        symbols = sympy.symbols(self.ring.variables)
        if not isinstance(symbols, tuple):
            symbols = (symbols,)
        expr = sympy.Integer(0)
        for exp, coeff in self._terms.items():
            term = sympy.Integer(coeff)
            for sym, power in zip(symbols, exp):
                term *= sym ** power
            expr += term
        return expr


def _split_terms(text: str) -> Iterable[str]:
    """按顶层的 + / - 切分项；指数里的负号（紧跟 ^）不切分"""
    current = ""
    for i, ch in enumerate(text):
        if ch in "+-" and current.strip("+-") and text[i - 1] not in "^*":
            yield current
            current = ""
        current += ch
    if current:
        yield current


def _parse_laurent(ring: LaurentRing, text: str) -> LaurentPoly:
    compact = "".join(text.split())
    if not compact:
        raise ValueError("空的多项式文本")
    total = ring.zero
    for raw in _split_terms(compact):
        sign = 1
        body = raw
        while body and body[0] in "+-":
            if body[0] == "-":
                sign = -sign
            body = body[1:]
        if not body:
            raise ValueError(f"无效的项: {raw!r}")
        coeff = sign
        exponents: Dict[str, int] = {}
        for factor in body.split("*"):
            if not factor:
                raise ValueError(f"无效的项: {raw!r}")
            if factor.lstrip("-").isdigit():
                coeff *= int(factor)
                continue
            var, _, power = factor.partition("^")
            exponents[var] = exponents.get(var, 0) + (int(power) if power else 1)
        total = total + ring.monomial(coeff, exponents)
    return total


def principal_root(value: complex, n: int) -> complex:
    """主值分支上的 n 次根"""
    return cmath.exp(cmath.log(value) / n)
