"""
平面构造器：给定逆时针端口和上行线位置的交叉点，自动定向、定符号并编号
"""

from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .model import Crossing, CrossingKind, Diagram, validate
from .orientation import renumber
from ..utils.exceptions import DiagramValidationError


@dataclass(frozen=True)
class PlanarCrossing:
    """
    平面交叉点

    Attributes:
        ports: 逆时针的四个边标签
        over: 0 表示端口 0、2 属于上行线，1 表示端口 1、3 属于上行线
        virtual: 是否为虚交叉点
    """
    ports: Tuple[int, int, int, int]
    over: int = 0
    virtual: bool = False


def diagram_from_planar(crossings: Sequence[PlanarCrossing], unknots: int = 0,
                        name: Optional[str] = None) -> Diagram:
    """
    由平面交叉点构造定向图表；每个分支从最小标签的边的第一个出现位置出发

    Args:
        crossings: 平面交叉点
        unknots: 额外圆圈个数
        name: 图表名称

    Returns:
        Diagram: 已定向、重编号的图表
    """
    places: Dict[int, List[Tuple[int, int]]] = {}
    for i, crossing in enumerate(crossings):
        for p, label in enumerate(crossing.ports):
            places.setdefault(label, []).append((i, p))
    for label, spots in places.items():
        if len(spots) != 2:
            raise DiagramValidationError(f"标签 {label} 出现了 {len(spots)} 次，应恰好两次")

    def other(spot):
        first, second = places[crossings[spot[0]].ports[spot[1]]]
        return second if spot == first else first

    arrivals: List[Set[int]] = [set() for _ in crossings]
    visited: Set[Tuple[int, int]] = set()
    for label in sorted(places):
        start = places[label][1]
        if start in visited:
            continue
        current = start
        while current not in visited:
            c, p = current
            visited.add(current)
            visited.add((c, (p + 2) % 4))
            arrivals[c].add(p)
            current = other((c, (p + 2) % 4))

    result: List[Crossing] = []
    incoming = []
    for i, planar in enumerate(crossings):
        if planar.virtual:
            result.append(Crossing(CrossingKind.VIRTUAL, tuple(planar.ports)))
            incoming.append(frozenset(arrivals[i]))
            continue
        under_in = next(p for p in arrivals[i] if p % 2 != planar.over)
        over_in = next(p for p in arrivals[i] if p % 2 == planar.over)
        ports = tuple(planar.ports)
        slots = ports[under_in:] + ports[:under_in]
        sign = 1 if (over_in - under_in) % 4 == 3 else -1
        result.append(Crossing(CrossingKind.CLASSICAL, slots, sign))
        incoming.append(frozenset({0, (over_in - under_in) % 4}))

    diagram = Diagram(tuple(result), unknots, tuple(incoming), name)
    return renumber(validate(diagram))
