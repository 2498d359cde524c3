"""
双色着色：每经过一个经典交叉点换一次颜色，经过虚交叉点颜色不变。
交叉点类型由两个虚线端在罗盘标架中的位置决定。
"""

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, List, Mapping, Sequence, Tuple, Union

from ..diagram import Compass, Crossing, Diagram, canonical_frame, orient, strand_cycles
from ..utils.exceptions import ColoringError
from ..utils.logger import get_logger

logger = get_logger(__name__)


class Color(str, Enum):
    SOLID = "solid"
    DOTTED = "dotted"

    def flipped(self) -> "Color":
        return Color.DOTTED if self is Color.SOLID else Color.SOLID


class Direction(str, Enum):
    N = "N"
    S = "S"
    E = "E"
    W = "W"

    def opposite(self) -> "Direction":
        return {Direction.N: Direction.S, Direction.S: Direction.N,
                Direction.E: Direction.W, Direction.W: Direction.E}[self]


_DIRECTION_BY_PAIR = {
    frozenset({Compass.SW, Compass.SE}): Direction.S,
    frozenset({Compass.NW, Compass.NE}): Direction.N,
    frozenset({Compass.SE, Compass.NE}): Direction.E,
    frozenset({Compass.SW, Compass.NW}): Direction.W,
}


@dataclass(frozen=True)
class BicolorCrossingType:
    """交叉点类型，例如 S+ 或 N-"""
    direction: Direction
    sign: int

    @property
    def label(self) -> str:
        return f"{self.direction.value}{'+' if self.sign > 0 else '-'}"

    def __str__(self) -> str:
        return self.label


@dataclass(frozen=True)
class Bicoloring:
    """
    边到颜色的映射，外加每个无交叉圆圈的颜色

    Attributes:
        edge_colors: 按边编号排序的 (边, 颜色)
        circle_colors: 无交叉圆圈的颜色
    """
    edge_colors: Tuple[Tuple[int, Color], ...]
    circle_colors: Tuple[Color, ...] = ()

    @classmethod
    def from_mapping(cls, colors: Mapping[int, Color], circles: Sequence[Color] = ()) -> "Bicoloring":
        return cls(tuple(sorted(colors.items())), tuple(circles))

    def as_dict(self) -> Dict[int, Color]:
        return dict(self.edge_colors)

    def color(self, edge: int) -> Color:
        for e, c in self.edge_colors:
            if e == edge:
                return c
        raise ColoringError(f"着色中没有边 {edge}")

    def to_json(self) -> Dict[str, str]:
        data = {str(e): c.value for e, c in self.edge_colors}
        for i, c in enumerate(self.circle_colors, start=1):
            data[f"circle{i}"] = c.value
        return data


def swap_colors(coloring: Bicoloring) -> Bicoloring:
    """实线与虚线互换；是对合"""
    return Bicoloring(
        tuple((e, c.flipped()) for e, c in coloring.edge_colors),
        tuple(c.flipped() for c in coloring.circle_colors),
    )


def enumerate_bicolorings(diagram: Diagram) -> List[Bicoloring]:
    """
    列出所有双色着色：每个分支由种子边（最小编号的边）的颜色决定

    Args:
        diagram: 图表（未定向时先定向）

    Returns:
        List[Bicoloring]: 经典图表恰有 2^k 个；若某个虚分支经过奇数个经典交叉点则为空
    """
    diagram = orient(diagram)
    offsets: List[Dict[int, int]] = []
    for cycle in strand_cycles(diagram):
        parity = 0
        offset: Dict[int, int] = {}
        for c, s in cycle:
            offset[diagram.crossings[c].slots[s]] = parity
            if diagram.crossings[c].is_classical:
                parity ^= 1
        if parity:
            logger.warning(f"分支 {sorted(offset)} 经过奇数个经典交叉点，没有双色着色")
            return []
        offsets.append(offset)

    seeds = (Color.SOLID, Color.DOTTED)
    result = []
    for choice in product(seeds, repeat=len(offsets) + diagram.unknot_components):
        colors: Dict[int, Color] = {}
        for seed, offset in zip(choice, offsets):
            for edge, parity in offset.items():
                colors[edge] = seed.flipped() if parity else seed
        result.append(Bicoloring.from_mapping(colors, choice[len(offsets):]))
    logger.debug(f"双色着色个数: {len(result)}")
    return result


def classify_slot_colors(crossing: Crossing, colors: Sequence[Color]) -> BicolorCrossingType:
    """
    按四个槽位的颜色判定交叉点类型

    Args:
        crossing: 带符号的经典交叉点
        colors: 槽位 0..3 上的颜色

    Returns:
        BicolorCrossingType
    """
    frame = canonical_frame(crossing)
    dotted = frame.compass_set(s for s in range(4) if colors[s] is Color.DOTTED)
    direction = _DIRECTION_BY_PAIR.get(dotted)
    if direction is None:
        raise ColoringError(
            f"交叉点 {crossing.to_token(True)} 的虚线端 {sorted(d.value for d in dotted)} 不相邻"
        )
    return BicolorCrossingType(direction, crossing.sign)


def classify_bicolor(diagram: Diagram, coloring: Bicoloring,
                     crossing: Union[Crossing, int]) -> BicolorCrossingType:
    """
    经典交叉点在给定着色下的类型

    Args:
        diagram: 已定向的图表
        coloring: 属于该图表的双色着色
        crossing: 交叉点或其下标

    Returns:
        BicolorCrossingType
    """
    if isinstance(crossing, int):
        crossing = diagram.crossings[crossing]
    colors = coloring.as_dict()
    if set(colors) != set(diagram.edges):
        raise ColoringError("着色不属于该图表")
    return classify_slot_colors(crossing, [colors[e] for e in crossing.slots])


def crossing_types(diagram: Diagram, coloring: Bicoloring) -> List[BicolorCrossingType]:
    """所有经典交叉点的类型，顺序同 diagram.classical_indices()"""
    diagram = orient(diagram)
    return [classify_bicolor(diagram, coloring, i) for i in diagram.classical_indices()]
