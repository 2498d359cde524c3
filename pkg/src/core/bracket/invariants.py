"""
建立在引擎之上的不变量：Kauffman 括号与 Jones 多项式、增强双色括号 F、
NOR 特化 Φ、三色括号 V
"""

from collections import Counter
from dataclasses import dataclass
from typing import Any, Dict, List, Optional, Sequence, Tuple

from ..algebra import CoefficientScheme, LaurentPoly, LaurentRing, make_scheme
from ..algebra.laurent import principal_root
from ..coloring import (
    Bicoloring,
    TricolorKind,
    Tricoloring,
    classify_bicolor,
    classify_tricolor,
    enumerate_bicolorings,
    enumerate_tricolorings,
)
from ..diagram import Diagram, components, orient
from ..utils.exceptions import AlgebraError, ColoringError
from ..utils.logger import get_logger
from .engine import LoopExponent, state_sum

logger = get_logger(__name__)

KAUFFMAN_RING = LaurentRing(("A",))
TRICOLOR_RING = LaurentRing(("x", "y"))
JONES_RING = LaurentRing(("t",))
JONES_HALF_RING = LaurentRing(("s",))


@dataclass(frozen=True)
class InvariantValue:
    """
    一个着色给出的不变量值

    Attributes:
        coloring_id: 着色在枚举顺序中的序号（从 1 开始）
        coloring: 产生该值的着色
        value: 环中的元素
    """
    coloring_id: int
    coloring: Any
    value: Any

    @property
    def text(self) -> str:
        return self.value.to_text()

    def to_json(self) -> Dict[str, Any]:
        return {"coloring": self.coloring_id, "value": self.text}


def multiset(values: Sequence[InvariantValue]) -> Counter:
    """用规范文本比较的多重集"""
    return Counter(v.text for v in values)


# --- Kauffman 括号与 Jones 多项式 ---

def kauffman_weights(diagram: Diagram) -> List[Tuple[LaurentPoly, LaurentPoly]]:
    """A 光滑化连接槽位 {0,1},{2,3}：在正交叉点上是 H，在负交叉点上是 V"""
    A = KAUFFMAN_RING.gen("A")
    A_inv = A ** -1
    weights = []
    for i in diagram.classical_indices():
        if diagram.crossings[i].sign > 0:
            weights.append((A, A_inv))
        else:
            weights.append((A_inv, A))
    return weights


def kauffman_loop_value() -> LaurentPoly:
    A = KAUFFMAN_RING.gen("A")
    return -(A ** 2) - A ** -2


def kauffman_bracket(diagram: Diagram) -> LaurentPoly:
    """
    Kauffman 括号 ⟨D⟩，圈值 -A^2 - A^-2，指数 |S| - 1

    Args:
        diagram: 图表（虚交叉点直接穿过）

    Returns:
        LaurentPoly: A 的 Laurent 多项式
    """
    diagram = orient(diagram)
    return state_sum(diagram, kauffman_weights(diagram), kauffman_loop_value(), LoopExponent.REDUCED)


def normalized_bracket(diagram: Diagram) -> LaurentPoly:
    """f(D) = (-A^3)^(-w) ⟨D⟩"""
    diagram = orient(diagram)
    A = KAUFFMAN_RING.gen("A")
    return (-(A ** 3)) ** (-diagram.writhe()) * kauffman_bracket(diagram)


def jones_eval(diagram: Diagram, t: complex) -> complex:
    """
    Jones 多项式在 t 处的值：f(D) 在 A = t^(-1/4)（主值分支）处求值

    Raises:
        AlgebraError: t = 0
    """
    if t == 0:
        raise AlgebraError("Jones 多项式不能在 t = 0 处求值")
    A = 1 / principal_root(complex(t), 4)
    return normalized_bracket(diagram).substitute({"A": A})


def jones_polynomial(diagram: Diagram) -> LaurentPoly:
    """
    精确的 Jones 多项式：A^k 对应 t^(-k/4)。
    奇数个分支时指数都是 4 的倍数，结果在 t 中；偶数个分支时在 s = t^(1/2) 中。
    """
    f = normalized_bracket(diagram)
    even = len(components(diagram)) % 2 == 0
    ring, step = (JONES_HALF_RING, 2) if even else (JONES_RING, 4)
    terms = {}
    for (power,), coefficient in f.terms():
        if power % step:
            raise AlgebraError(f"A 的指数 {power} 不是 {step} 的倍数")
        terms[(-power // step,)] = coefficient
    return LaurentPoly(ring, terms)


# --- 增强双色括号 ---

def bicolor_weights(diagram: Diagram, coloring: Bicoloring,
                    scheme: CoefficientScheme) -> List[Tuple[Any, Any]]:
    return [
        scheme.weights(classify_bicolor(diagram, coloring, i).direction.value,
                       diagram.crossings[i].sign)
        for i in diagram.classical_indices()
    ]


def writhe_factor(scheme: CoefficientScheme) -> Any:
    """负扭结因子 d·a'_n + b'_n；符号方案中是 -b/(n a^2)，NOR 方案中是 t"""
    return scheme.d * scheme.a("n", True) + scheme.b("n", True)


def enhanced_F(diagram: Diagram, coloring: Bicoloring,
               scheme: Optional[CoefficientScheme] = None) -> Any:
    """
    F(D, λ) = (d·a'_n + b'_n)^W ⟨D⟩_λ，括号的圈指数为 |S|

    Args:
        diagram: 图表
        coloring: 属于该图表的双色着色
        scheme: 系数方案，默认符号方案

    Returns:
        环中的元素

    Raises:
        ColoringError: 着色不属于该图表
    """
    scheme = scheme or make_scheme("symbolic")
    diagram = orient(diagram)
    bracket = state_sum(diagram, bicolor_weights(diagram, coloring, scheme), scheme.d, LoopExponent.FULL)
    return writhe_factor(scheme) ** diagram.writhe() * bracket


def enhanced_invariant(diagram: Diagram,
                       scheme: Optional[CoefficientScheme] = None) -> List[InvariantValue]:
    """所有双色着色上 F 的多重集；没有着色时为空并记录警告"""
    scheme = scheme or make_scheme("symbolic")
    diagram = orient(diagram)
    colorings = enumerate_bicolorings(diagram)
    if not colorings:
        logger.warning("图表没有双色着色，增强不变量为空")
    values = [
        InvariantValue(i, coloring, enhanced_F(diagram, coloring, scheme))
        for i, coloring in enumerate(colorings, start=1)
    ]
    logger.info(f"增强不变量 ({scheme.family}) 计算完成: {len(values)} 个值")
    return values


def nor_phi(diagram: Diagram) -> List[InvariantValue]:
    """F8 上的 NOR 特化，拧数因子为 t^W"""
    return enhanced_invariant(diagram, make_scheme("nor"))


# --- 三色括号 ---

def tricolor_weights(diagram: Diagram, coloring: Tricoloring) -> List[Tuple[LaurentPoly, LaurentPoly]]:
    x, y = TRICOLOR_RING.gens()
    weights = []
    for i in diagram.classical_indices():
        kind = classify_tricolor(diagram, coloring, i)
        base = x if kind.kind is TricolorKind.MONO else y
        if kind.sign > 0:
            weights.append((base, base ** -1))
        else:
            weights.append((base ** -1, base))
    return weights


def tricolor_V(diagram: Diagram, coloring: Tricoloring) -> LaurentPoly:
    """
    V(D, c) = (-x^3)^(-w) ⟨D⟩_c，圈值 -x^2 - x^-2，指数 |S| - 1

    Raises:
        ColoringError: 着色不属于该图表或不满足 Fox 条件
    """
    diagram = orient(diagram)
    x = TRICOLOR_RING.gen("x")
    delta = -(x ** 2) - x ** -2
    bracket = state_sum(diagram, tricolor_weights(diagram, coloring), delta, LoopExponent.REDUCED)
    return (-(x ** 3)) ** (-diagram.writhe()) * bracket


def tricolor_invariant(diagram: Diagram) -> List[InvariantValue]:
    """所有三色着色上 V 的多重集"""
    diagram = orient(diagram)
    census = enumerate_tricolorings(diagram)
    if not census.complete:
        raise ColoringError(f"三色着色个数 {census.count} 超过枚举上限，无法计算三色不变量")
    values = [
        InvariantValue(i, coloring, tricolor_V(diagram, coloring))
        for i, coloring in enumerate(census.colorings, start=1)
    ]
    logger.info(f"三色不变量计算完成: {len(values)} 个值")
    return values
