"""
状态和引擎：对所有 2^n 个光滑化状态求和

状态是经典交叉点上的位掩码，第 i 位为 0 表示第 i 个经典交叉点取 H 光滑化，1 表示取 V。
圈数用并查集在边上计算；虚交叉点总是连接对顶槽位。
"""

from dataclasses import dataclass
from enum import Enum
from typing import Any, Dict, List, Sequence, Tuple

from ..config import config
from ..diagram import Diagram, Smoothing, orient, smoothing_pairs
from ..utils.exceptions import RingMismatchError, SkeinkitError
from ..utils.logger import get_logger

logger = get_logger(__name__)

Pairs = Tuple[Tuple[int, int], Tuple[int, int]]


class LoopExponent(str, Enum):
    """d 的指数：|S|（增强括号）或 |S| - 1（Kauffman 括号与三色括号）"""
    FULL = "|S|"
    REDUCED = "|S|-1"


class DisjointSet:
    """带路径压缩的并查集"""

    def __init__(self, size: int):
        self.parent = list(range(size))

    def find(self, x: int) -> int:
        parent = self.parent
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(self, x: int, y: int) -> None:
        rx, ry = self.find(x), self.find(y)
        if rx != ry:
            self.parent[rx] = ry

    def count(self) -> int:
        return sum(1 for i, p in enumerate(self.parent) if i == p)


@dataclass(frozen=True)
class SmoothingPlan:
    """
    预先算好的连接表

    Attributes:
        edge_count: 边的个数（并查集大小）
        fixed: 虚交叉点上总是连接的边对
        choices: 每个经典交叉点 (H 连接, V 连接)，每个连接是两对边下标
        circles: 无交叉圆圈个数
    """
    edge_count: int
    fixed: Tuple[Tuple[int, int], ...]
    choices: Tuple[Tuple[Pairs, Pairs], ...]
    circles: int


def smoothing_plan(diagram: Diagram) -> SmoothingPlan:
    diagram = orient(diagram)
    index = {edge: i for i, edge in enumerate(diagram.edges)}
    fixed = []
    choices = []
    for crossing in diagram.crossings:
        e = [index[x] for x in crossing.slots]
        if not crossing.is_classical:
            fixed += [(e[0], e[2]), (e[1], e[3])]
            continue
        options = []
        for smoothing in (Smoothing.H, Smoothing.V):
            (s1, s2), (s3, s4) = smoothing_pairs(crossing, smoothing)
            options.append(((e[s1], e[s2]), (e[s3], e[s4])))
        choices.append(tuple(options))
    return SmoothingPlan(len(index), tuple(fixed), tuple(choices), diagram.unknot_components)


def _loops(plan: SmoothingPlan, state: int) -> int:
    dsu = DisjointSet(plan.edge_count)
    for x, y in plan.fixed:
        dsu.union(x, y)
    for i, options in enumerate(plan.choices):
        first, second = options[(state >> i) & 1]
        dsu.union(*first)
        dsu.union(*second)
    return dsu.count() + plan.circles


def smooth_state(diagram: Diagram, state: int) -> int:
    """
    某个状态下的圈数

    Args:
        diagram: 图表
        state: 位掩码，第 i 位对应第 i 个经典交叉点

    Returns:
        int: 圈数，包括无交叉圆圈
    """
    return _loops(smoothing_plan(diagram), state)


def _check_size(diagram: Diagram) -> None:
    limit = config.get("engine", "max_crossings")
    n = len(diagram.classical_indices())
    if n > limit:
        raise SkeinkitError(f"经典交叉点数 {n} 超过上限 {limit}")


def _half_products(weights: Sequence[Tuple[Any, Any]], one: Any) -> List[Any]:
    """每个位掩码上所选系数的乘积"""
    products = [one]
    for h, v in weights:
        products = [p * h for p in products] + [p * v for p in products]
    return products


def state_sum(diagram: Diagram, weights: Sequence[Tuple[Any, Any]], d: Any,
              loop_exponent: LoopExponent = LoopExponent.FULL) -> Any:
    """
    Σ_S (所选系数之积) · d^指数

    乘积表按经典交叉点的低半和高半分别预先计算。

    Args:
        diagram: 图表
        weights: 每个经典交叉点的 (H 系数, V 系数)，顺序同 classical_indices()
        d: 圈值
        loop_exponent: |S| 或 |S| - 1

    Returns:
        环中的元素

    Raises:
        RingMismatchError: 系数与 d 不在同一个环中
    """
    diagram = orient(diagram)
    _check_size(diagram)
    plan = smoothing_plan(diagram)
    n = len(plan.choices)
    if len(weights) != n:
        raise ValueError(f"需要 {n} 个交叉点的系数，实际 {len(weights)} 个")
    ring = d.ring
    for h, v in weights:
        if getattr(h, "ring", None) != ring or getattr(v, "ring", None) != ring:
            raise RingMismatchError(f"交叉点系数与圈值不在同一个环 {ring.name} 中")

    if not diagram.crossings and plan.circles == 0:
        return ring.one

    low = n // 2
    low_products = _half_products(weights[:low], ring.one)
    high_products = _half_products(weights[low:], ring.one)
    mask = (1 << low) - 1

    # 固定高半部分时先按圈数累加低半部分的乘积，每组只乘一次
    by_loops: Dict[int, Any] = {}
    for high in range(len(high_products)):
        buckets: Dict[int, Any] = {}
        for low_state in range(mask + 1):
            loops = _loops(plan, (high << low) | low_state)
            term = low_products[low_state]
            buckets[loops] = buckets[loops] + term if loops in buckets else term
        for loops, partial in buckets.items():
            term = partial * high_products[high]
            by_loops[loops] = by_loops[loops] + term if loops in by_loops else term

    shift = 1 if loop_exponent is LoopExponent.REDUCED else 0
    total = ring.zero
    for loops, coefficient in sorted(by_loops.items()):
        total = total + coefficient * d ** (loops - shift)
    logger.debug(f"状态和完成: {1 << n} 个状态, 圈数分布 {sorted(by_loops)}")
    return total
