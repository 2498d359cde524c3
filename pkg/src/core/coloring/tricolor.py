"""
Fox 三色着色：在 GF(3) 上对每个经典交叉点的方程 2·c(上) ≡ c(下入) + c(下出) 做高斯消元
"""

from dataclasses import dataclass
from enum import Enum
from itertools import product
from typing import Dict, List, Optional, Tuple, Union

import networkx as nx
import numpy as np

from ..config import config
from ..diagram import Crossing, Diagram
from ..utils.exceptions import ColoringError
from ..utils.logger import get_logger

logger = get_logger(__name__)

# GF(3) 中 1 和 2 的逆元都是自身
_INVERSE_MOD3 = {1: 1, 2: 2}


class TricolorKind(str, Enum):
    MONO = "Mono"
    POLY = "Poly"


@dataclass(frozen=True)
class TricolorCrossingType:
    kind: TricolorKind
    sign: int

    @property
    def label(self) -> str:
        return f"{self.kind.value}{'+' if self.sign > 0 else '-'}"


@dataclass(frozen=True)
class Tricoloring:
    """
    Fox 弧到颜色 {0,1,2} 的映射

    Attributes:
        arc_colors: (弧代表, 颜色)，代表是弧上最小的边；无交叉圆圈用负数 -1, -2, ...
        edge_colors: 每条边的颜色
    """
    arc_colors: Tuple[Tuple[int, int], ...]
    edge_colors: Tuple[Tuple[int, int], ...]

    def color(self, edge: int) -> int:
        return dict(self.edge_colors)[edge]

    def is_trivial(self) -> bool:
        return len({c for _, c in self.arc_colors}) <= 1

    def to_json(self) -> Dict[str, int]:
        return {str(arc): color for arc, color in self.arc_colors}


@dataclass(frozen=True)
class TricoloringCensus:
    """三色着色计数；count 不超过上限时 colorings 列出全部解"""
    count: int
    colorings: Tuple[Tricoloring, ...]

    @property
    def complete(self) -> bool:
        return len(self.colorings) == self.count

    def __iter__(self):
        return iter(self.colorings)

    def __len__(self) -> int:
        return len(self.colorings)


def fox_arcs(diagram: Diagram) -> List[Tuple[int, ...]]:
    """
    Fox 弧：经过上行线和虚交叉点连接起来的极大边链。
    按最小边排序，每条弧是排序后的边元组；无交叉圆圈不在其中。
    """
    graph = nx.Graph()
    graph.add_nodes_from(diagram.edges)
    for crossing in diagram.crossings:
        slots = crossing.slots
        graph.add_edge(slots[1], slots[3])
        if not crossing.is_classical:
            graph.add_edge(slots[0], slots[2])
    arcs = [tuple(sorted(component)) for component in nx.connected_components(graph)]
    return sorted(arcs)


def _arc_index(diagram: Diagram) -> Tuple[List[int], Dict[int, int]]:
    arcs = fox_arcs(diagram)
    representatives = [arc[0] for arc in arcs]
    representatives += [-(i + 1) for i in range(diagram.unknot_components)]
    index = {edge: i for i, arc in enumerate(arcs) for edge in arc}
    return representatives, index


def fox_matrix(diagram: Diagram) -> np.ndarray:
    """每个经典交叉点一行、每条弧一列的 GF(3) 系数矩阵"""
    representatives, index = _arc_index(diagram)
    rows = []
    for crossing in diagram.crossings:
        if not crossing.is_classical:
            continue
        row = np.zeros(len(representatives), dtype=np.int64)
        row[index[crossing.slots[1]]] += 2
        row[index[crossing.slots[0]]] -= 1
        row[index[crossing.slots[2]]] -= 1
        rows.append(row % 3)
    if not rows:
        return np.zeros((0, len(representatives)), dtype=np.int64)
    return np.vstack(rows)


def gf3_nullspace(matrix: np.ndarray) -> List[np.ndarray]:
    """
    GF(3) 上的零空间基，用行化简得到

    Args:
        matrix: 整数矩阵（按模 3 理解）

    Returns:
        List[np.ndarray]: 基向量，每个自由变量一个
    """
    m = matrix.copy() % 3
    rows, cols = m.shape
    pivots: List[int] = []
    r = 0
    for c in range(cols):
        if r == rows:
            break
        pivot = next((i for i in range(r, rows) if m[i, c] % 3), None)
        if pivot is None:
            continue
        m[[r, pivot]] = m[[pivot, r]]
        m[r] = (m[r] * _INVERSE_MOD3[int(m[r, c])]) % 3
        for i in range(rows):
            if i != r and m[i, c]:
                m[i] = (m[i] - m[i, c] * m[r]) % 3
        pivots.append(c)
        r += 1

    basis = []
    for free in (c for c in range(cols) if c not in pivots):
        vector = np.zeros(cols, dtype=np.int64)
        vector[free] = 1
        for i, p in enumerate(pivots):
            vector[p] = (-m[i, free]) % 3
        basis.append(vector)
    return basis


def tri_count(diagram: Diagram) -> int:
    """三色着色个数 3^(解空间维数)，包括平凡着色"""
    dimension = len(gf3_nullspace(fox_matrix(diagram)))
    return 3 ** dimension


def enumerate_tricolorings(diagram: Diagram, cap: Optional[int] = None) -> TricoloringCensus:
    """
    列出所有三色着色，按自由变量的字典序扫描

    Args:
        diagram: 图表
        cap: 最多列出的个数，默认取配置 engine.tricoloring_enumeration_cap

    Returns:
        TricoloringCensus: 计数总是精确的；超过上限时不列出着色
    """
    if cap is None:
        cap = config.get("engine", "tricoloring_enumeration_cap")
    representatives, index = _arc_index(diagram)
    basis = gf3_nullspace(fox_matrix(diagram))
    count = 3 ** len(basis)
    if count > cap:
        logger.info(f"三色着色个数 {count} 超过上限 {cap}，只返回计数")
        return TricoloringCensus(count, ())

    colorings = []
    for coefficients in product(range(3), repeat=len(basis)):
        vector = np.zeros(len(representatives), dtype=np.int64)
        for k, v in zip(coefficients, basis):
            vector = (vector + k * v) % 3
        arc_colors = tuple((rep, int(vector[i])) for i, rep in enumerate(representatives))
        edge_colors = tuple(sorted((e, int(vector[i])) for e, i in index.items()))
        colorings.append(Tricoloring(arc_colors, edge_colors))
    logger.debug(f"三色着色个数: {count}")
    return TricoloringCensus(count, tuple(colorings))


def classify_tricolor(diagram: Diagram, coloring: Tricoloring,
                      crossing: Union[Crossing, int]) -> TricolorCrossingType:
    """
    Mono 当且仅当上行弧和两段下行弧同色

    Args:
        diagram: 已定向的图表
        coloring: 属于该图表的三色着色
        crossing: 经典交叉点或其下标

    Returns:
        TricolorCrossingType
    """
    if isinstance(crossing, int):
        crossing = diagram.crossings[crossing]
    if not crossing.is_classical or crossing.sign is None:
        raise ColoringError(f"只能对带符号的经典交叉点分类: {crossing.to_token()}")
    colors = dict(coloring.edge_colors)
    if set(colors) != set(diagram.edges):
        raise ColoringError("三色着色不属于该图表")
    over, under_in, under_out = (colors[crossing.slots[s]] for s in (1, 0, 2))
    if (2 * over - under_in - under_out) % 3:
        raise ColoringError(f"交叉点 {crossing.to_token()} 不满足 Fox 条件")
    kind = TricolorKind.MONO if over == under_in == under_out else TricolorKind.POLY
    return TricolorCrossingType(kind, crossing.sign)
