"""
定向模块：沿对顶槽位遍历分支，推断方向和交叉点符号，并做规范重编号
"""

from dataclasses import dataclass
from itertools import permutations, product
from typing import Dict, List, Sequence, Tuple

from .model import Crossing, Diagram, Slot
from ..utils.exceptions import DiagramValidationError, OrientationError
from ..utils.logger import get_logger

logger = get_logger(__name__)

# 超过这个分支数时规范形式只按最小边排序，不再枚举排列
_MAX_PERMUTED_COMPONENTS = 5


@dataclass(frozen=True)
class Component:
    """一个链环分支：沿定向排列的边；无交叉圆圈的 edges 为空"""
    edges: Tuple[int, ...]

    @property
    def is_circle(self) -> bool:
        return not self.edges


def partner_table(diagram: Diagram) -> Dict[Slot, Slot]:
    """每个 (交叉点, 槽位) 位置沿边到达的另一个位置"""
    partner: Dict[Slot, Slot] = {}
    for edge, places in diagram.occurrences().items():
        if len(places) != 2:
            raise DiagramValidationError(f"边 {edge} 出现了 {len(places)} 次，应恰好两次")
        first, second = places
        partner[first] = second
        partner[second] = first
    return partner


def _trace(diagram: Diagram, partner: Dict[Slot, Slot], start: Slot) -> List[Slot]:
    """从到达位置 start 出发穿过对顶槽位，返回依次到达的位置"""
    cycle = [start]
    current = start
    while True:
        c, s = current
        current = partner[(c, (s + 2) % 4)]
        if current == start:
            return cycle
        cycle.append(current)


def _reverse(cycle: Sequence[Slot]) -> List[Slot]:
    return [(c, (s + 2) % 4) for c, s in reversed(cycle)]


def _raw_cycles(diagram: Diagram) -> List[List[Slot]]:
    partner = partner_table(diagram)
    occurrences = diagram.occurrences()
    seen = set()
    cycles = []
    for edge in sorted(occurrences):
        departure, arrival = occurrences[edge]
        if arrival in seen:
            continue
        cycle = _trace(diagram, partner, arrival)
        for c, s in cycle:
            seen.add((c, s))
            seen.add((c, (s + 2) % 4))
        cycles.append(cycle)
    return cycles


def _votes(diagram: Diagram, cycle: Sequence[Slot]) -> Tuple[int, int]:
    """(支持当前方向的约束数, 反对的约束数)"""
    agree = disagree = 0
    for c, s in cycle:
        crossing = diagram.crossings[c]
        if not crossing.is_classical:
            continue
        if s in (0, 2):
            ok = s == 0
        elif crossing.sign is not None:
            ok = s == crossing.over_in_slot()
        else:
            continue
        if ok:
            agree += 1
        else:
            disagree += 1
    return agree, disagree


def _sequential_score(edges: Sequence[int]) -> int:
    """相邻边编号递增（允许从最大绕回最小）的次数"""
    low, high = min(edges), max(edges)
    score = 0
    for i, edge in enumerate(edges):
        following = edges[(i + 1) % len(edges)]
        if following == edge + 1 or (edge == high and following == low):
            score += 1
    return score


def _choose_direction(diagram: Diagram, cycle: List[Slot]) -> List[Slot]:
    agree, disagree = _votes(diagram, cycle)
    if agree and disagree:
        edges = sorted({diagram.crossings[c].slots[s] for c, s in cycle})
        raise OrientationError(f"分支 {edges} 的下行线位置与显式符号互相矛盾")
    if agree:
        return cycle
    if disagree:
        return _reverse(cycle)

    reverse = _reverse(cycle)
    forward_edges = [diagram.crossings[c].slots[s] for c, s in cycle]
    backward_edges = [diagram.crossings[c].slots[s] for c, s in reverse]
    forward, backward = _sequential_score(forward_edges), _sequential_score(backward_edges)
    if forward == backward and any(diagram.crossings[c].is_classical for c, _ in cycle):
        # 只作为上行线经过经典交叉点且编号无序：沿遍历方向定向
        logger.debug(f"分支 {sorted(forward_edges)} 的编号不连续，按遍历方向定向")
    return cycle if forward >= backward else reverse


def _start_at_min_edge(diagram: Diagram, cycle: List[Slot]) -> List[Slot]:
    edges = [diagram.crossings[c].slots[s] for c, s in cycle]
    k = edges.index(min(edges))
    return cycle[k:] + cycle[:k]


def strand_cycles(diagram: Diagram) -> List[List[Slot]]:
    """
    已定向图表的分支，每个分支是依次到达的 (交叉点, 槽位) 列表，
    从分支最小编号的边开始；分支按最小边排序。

    Args:
        diagram: 已定向的图表

    Returns:
        List[List[Slot]]: 分支列表（不含无交叉圆圈）
    """
    if not diagram.is_oriented:
        diagram = orient(diagram)
    cycles = []
    for cycle in _raw_cycles(diagram):
        c, s = cycle[0]
        if s not in diagram.incoming[c]:
            cycle = _reverse(cycle)
        cycles.append(_start_at_min_edge(diagram, cycle))
    cycles.sort(key=lambda cyc: diagram.crossings[cyc[0][0]].slots[cyc[0][1]])
    return cycles


def orient(diagram: Diagram) -> Diagram:
    """
    推断每条边的方向和每个经典交叉点的符号

    下行线经过的位置强制从槽位 0 进入；显式符号强制上行线从槽位 3 (+) 或 1 (-) 进入；
    没有任何约束的分支按边编号递增的方向定向，编号无序时按遍历方向定向。

    Args:
        diagram: 图表

    Returns:
        Diagram: 带方向和符号的新图表

    Raises:
        OrientationError: 约束冲突
    """
    if diagram.is_oriented:
        return diagram

    incoming: List[set] = [set() for _ in diagram.crossings]
    for cycle in _raw_cycles(diagram):
        for c, s in _choose_direction(diagram, cycle):
            incoming[c].add(s)

    crossings: List[Crossing] = []
    for i, crossing in enumerate(diagram.crossings):
        if not crossing.is_classical:
            crossings.append(crossing)
            continue
        if 0 not in incoming[i]:
            raise OrientationError(f"交叉点 {crossing.to_token()} 的下行线没有从槽位 0 进入")
        sign = 1 if 3 in incoming[i] else -1
        if crossing.sign is not None and crossing.sign != sign:
            raise OrientationError(f"交叉点 {crossing.to_token(True)} 的显式符号与定向矛盾")
        crossings.append(crossing.with_sign(sign))

    oriented = Diagram(tuple(crossings), diagram.unknot_components, tuple(incoming), diagram.name)
    logger.debug(f"定向完成: 拧数 {oriented.writhe()}")
    return oriented


def components(diagram: Diagram) -> List[Component]:
    """
    按分支划分边，分支按最小边编号排序，无交叉圆圈排在最后

    Args:
        diagram: 图表（未定向时先定向）

    Returns:
        List[Component]: 分支列表，长度等于分支数
    """
    diagram = orient(diagram)
    result = [
        Component(tuple(diagram.crossings[c].slots[s] for c, s in cycle))
        for cycle in strand_cycles(diagram)
    ]
    result.extend(Component(()) for _ in range(diagram.unknot_components))
    return result


def _relabel(diagram: Diagram, cycles: Sequence[List[Slot]], starts: Sequence[int]) -> Dict[int, int]:
    mapping: Dict[int, int] = {}
    label = 1
    for cycle, start in zip(cycles, starts):
        for c, s in cycle[start:] + cycle[:start]:
            mapping[diagram.crossings[c].slots[s]] = label
            label += 1
    return mapping


def _apply_labels(diagram: Diagram, mapping: Dict[int, int]) -> Tuple[Crossing, ...]:
    return tuple(
        Crossing(c.kind, tuple(mapping[e] for e in c.slots), c.sign)
        for c in diagram.crossings
    )


def renumber(diagram: Diagram) -> Diagram:
    """规范重编号：分支按最小边排序，从最小边开始沿定向依次编号 1, 2, ..."""
    diagram = orient(diagram)
    cycles = strand_cycles(diagram)
    mapping = _relabel(diagram, cycles, [0] * len(cycles))
    return Diagram(_apply_labels(diagram, mapping), diagram.unknot_components,
                   diagram.incoming, diagram.name)


def canonical_key(diagram: Diagram) -> tuple:
    """
    与边编号和交叉点顺序无关的比较键：在所有分支顺序和起点上取最小的重编号结果。
    两个图表的键相等当且仅当它们作为带定向的 PD 组合结构同构。
    """
    diagram = orient(diagram)
    cycles = strand_cycles(diagram)
    if len(cycles) <= _MAX_PERMUTED_COMPONENTS:
        orders = list(permutations(range(len(cycles))))
    else:
        orders = [tuple(range(len(cycles)))]

    best = None
    for order in orders:
        ordered = [cycles[i] for i in order]
        for starts in product(*(range(len(cycle)) for cycle in ordered)):
            mapping = _relabel(diagram, ordered, starts)
            key = tuple(sorted(
                (c.kind.value, _rotation_key(c, mapping), c.sign or 0)
                for c in diagram.crossings
            ))
            if best is None or key < best:
                best = key
    return (diagram.unknot_components, best or ())


def _rotation_key(crossing: Crossing, mapping: Dict[int, int]) -> Tuple[int, ...]:
    slots = tuple(mapping[e] for e in crossing.slots)
    if crossing.is_classical:
        return slots
    return min(slots[i:] + slots[:i] for i in range(4))
