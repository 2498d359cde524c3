"""
Ω3a 缠结：三条直线构成的 R3 局部图 L 与 L'，以及它们的闭包、圈数表和着色类型表

ℓ1 水平向东且在最上层，ℓ2 在中间，ℓ3 在最下层。L' 把 ℓ1 平移到三角形另一侧，
因此每条线上交叉点的顺序都反过来。交叉点编号：1 = ℓ2×ℓ3，2 = ℓ1×ℓ3，3 = ℓ1×ℓ2。
"""

import math
from collections import Counter
from dataclasses import dataclass
from itertools import product
from typing import Dict, List, Sequence, Tuple

import numpy as np

from ..algebra import CoefficientScheme
from ..bracket import DisjointSet
from ..coloring import BicolorCrossingType, Color, classify_slot_colors
from ..diagram import (
    Crossing,
    CrossingKind,
    Diagram,
    PlanarCrossing,
    Smoothing,
    diagram_from_planar,
    smoothing_pairs,
)
from ..utils.logger import get_logger
from .equations import ConstraintEntry

logger = get_logger(__name__)

SIDES = ("L", "L'")

# (经过的点, 方向, 高度)；ℓ1 的 y 坐标由 side 决定
_LINE_Y = {"L": 0.0, "L'": 2.5}
_OTHER_LINES = (((1.0, 0.0), (-1.0, 1.7), 2), ((-1.0, 0.0), (-1.0, -1.7), 1))
_CENTER = np.array([0.0, 1.0])
_RADIUS = 10.0

# 交叉点编号到线对
CROSSING_LINES = ((1, 2), (0, 2), (0, 1))

# 着色表中的线段 a、b、c 分别是 ℓ2、ℓ1、ℓ3 的入口段
COLORED_LINES = (1, 0, 2)

REFERENCE_LOOP_TABLE = (
    ((4, 3, 3, 2, 3, 2, 2, 1), (2, 1, 1, 2, 1, 2, 2, 3)),
    ((2, 1, 1, 2, 1, 2, 2, 3), (4, 3, 3, 2, 3, 2, 2, 1)),
    ((3, 2, 2, 3, 2, 1, 1, 2), (3, 2, 2, 3, 2, 1, 1, 2)),
    ((3, 2, 2, 1, 2, 1, 3, 2), (3, 2, 2, 1, 2, 1, 3, 2)),
    ((3, 2, 2, 1, 2, 3, 1, 2), (3, 2, 2, 1, 2, 3, 1, 2)),
)

REFERENCE_COLORING_TABLE = {
    "L": (
        ("N+", "N-", "N+"), ("W+", "E-", "N+"), ("N+", "W-", "E+"), ("W+", "S-", "E+"),
        ("E+", "N-", "W+"), ("S+", "E-", "W+"), ("E+", "W-", "S+"), ("S+", "S-", "S+"),
    ),
    "L'": (
        ("S+", "S-", "S+"), ("E+", "W-", "S+"), ("S+", "E-", "W+"), ("E+", "N-", "W+"),
        ("W+", "S-", "E+"), ("N+", "W-", "E+"), ("W+", "E-", "N+"), ("N+", "N-", "N+"),
    ),
}


@dataclass(frozen=True)
class Omega3Tangle:
    """
    一侧的 Ω3a 缠结

    Attributes:
        side: "L" 或 "L'"
        crossings: 按编号 1, 2, 3 排列的经典交叉点，槽位是线段编号
        over_parity: 每个交叉点上行线所在端口的奇偶性（相对逆时针射线顺序）
        rays: 每个交叉点逆时针的四条线段
        boundary: 六个边界线段，逆时针排列，从 ℓ1 的出口开始
    """
    side: str
    crossings: Tuple[Crossing, ...]
    over_parity: Tuple[int, ...]
    rays: Tuple[Tuple[int, int, int, int], ...]
    boundary: Tuple[int, ...]

    @staticmethod
    def segment(line: int, part: str) -> int:
        """线段编号：第 k 条线的入口段、中段、出口段分别为 3k+1、3k+2、3k+3"""
        return 3 * line + {"in": 1, "mid": 2, "out": 3}[part]


@dataclass(frozen=True)
class TangleClosure:
    """六个边界点的一个不交叉完美匹配（按边界位置给出）"""
    index: int
    pairs: Tuple[Tuple[int, int], ...]


def _lines(side: str):
    return (((0.0, _LINE_Y[side]), (1.0, 0.0), 3),) + _OTHER_LINES


def _angle(vector: Sequence[float]) -> float:
    return math.atan2(vector[1], vector[0]) % (2 * math.pi)


def _boundary_parameters(point: np.ndarray, direction: np.ndarray) -> Tuple[float, float]:
    """直线与大圆的两个交点参数 (入口, 出口)"""
    offset = point - _CENTER
    a = direction @ direction
    b = 2 * offset @ direction
    c = offset @ offset - _RADIUS ** 2
    root = math.sqrt(b * b - 4 * a * c)
    return (-b - root) / (2 * a), (-b + root) / (2 * a)


def build_tangle(side: str) -> Omega3Tangle:
    """
    按几何构造一侧的缠结

    Args:
        side: "L" 或 "L'"

    Returns:
        Omega3Tangle
    """
    if side not in SIDES:
        raise ValueError(f"未知的缠结侧: {side}")
    lines = [(np.array(p), np.array(d), h) for p, d, h in _lines(side)]

    # 每对线的交点及其在两条线上的参数
    hits: Dict[Tuple[int, int], Tuple[np.ndarray, float, float]] = {}
    for i, j in CROSSING_LINES:
        (pi, di, _), (pj, dj, _) = lines[i], lines[j]
        ti, tj = np.linalg.solve(np.column_stack([di, -dj]), pj - pi)
        hits[(i, j)] = (pi + ti * di, ti, tj)

    order: Dict[int, List[Tuple[float, Tuple[int, int]]]] = {k: [] for k in range(3)}
    for (i, j), (_, ti, tj) in hits.items():
        order[i].append((ti, (i, j)))
        order[j].append((tj, (i, j)))

    # (交叉点, 线) -> (进入段, 离开段)
    pieces: Dict[Tuple[Tuple[int, int], int], Tuple[int, int]] = {}
    for k, entries in order.items():
        first, second = sorted(entries)
        seg = Omega3Tangle.segment
        pieces[(first[1], k)] = (seg(k, "in"), seg(k, "mid"))
        pieces[(second[1], k)] = (seg(k, "mid"), seg(k, "out"))

    crossings, parities, ray_lists = [], [], []
    for pair in CROSSING_LINES:
        over_line, under_line = sorted(pair, key=lambda k: -lines[k][2])
        rays = []
        for k in pair:
            incoming, outgoing = pieces[(pair, k)]
            direction = lines[k][1]
            rays.append((_angle(-direction), incoming, k, True))
            rays.append((_angle(direction), outgoing, k, False))
        rays.sort()
        under_in = next(i for i, r in enumerate(rays) if r[2] == under_line and r[3])
        over_in = next(i for i, r in enumerate(rays) if r[2] == over_line and r[3])
        labels = [r[1] for r in rays]
        slots = tuple(labels[under_in:] + labels[:under_in])
        sign = 1 if (over_in - under_in) % 4 == 3 else -1
        crossings.append(Crossing(CrossingKind.CLASSICAL, slots, sign))
        parities.append(over_in % 2)
        ray_lists.append(tuple(labels))

    ends = []
    for k, (point, direction, _) in enumerate(lines):
        t_in, t_out = _boundary_parameters(point, direction)
        ends.append((_angle(point + t_in * direction - _CENTER), Omega3Tangle.segment(k, "in")))
        ends.append((_angle(point + t_out * direction - _CENTER), Omega3Tangle.segment(k, "out")))
    reference = next(a for a, s in ends if s == Omega3Tangle.segment(0, "out"))
    ends.sort(key=lambda item: (item[0] - reference) % (2 * math.pi))

    return Omega3Tangle(side, tuple(crossings), tuple(parities), tuple(ray_lists),
                        tuple(s for _, s in ends))


def non_crossing_matchings(points: int = 6) -> List[TangleClosure]:
    """圆周上 points 个点的所有不交叉完美匹配，按字典序编号 1, 2, ..."""
    def match(items: Tuple[int, ...]) -> List[List[Tuple[int, int]]]:
        if not items:
            return [[]]
        result = []
        first = items[0]
        for k in range(1, len(items), 2):
            inside, outside = items[1:k], items[k + 1:]
            for left in match(inside):
                for right in match(outside):
                    result.append([(first, items[k])] + left + right)
        return result

    matchings = sorted(tuple(sorted(m)) for m in match(tuple(range(points))))
    return [TangleClosure(i, m) for i, m in enumerate(matchings, start=1)]


def closure_loops(tangle: Omega3Tangle, closure: TangleClosure, state: int) -> int:
    """
    闭包在某个光滑化状态下的圈数；状态第 (2 - i) 位对应交叉点 i+1，0 为 H、1 为 V
    """
    dsu = DisjointSet(10)
    for x, y in closure.pairs:
        dsu.union(tangle.boundary[x], tangle.boundary[y])
    for i, crossing in enumerate(tangle.crossings):
        choice = Smoothing.V if (state >> (2 - i)) & 1 else Smoothing.H
        for s1, s2 in smoothing_pairs(crossing, choice):
            dsu.union(crossing.slots[s1], crossing.slots[s2])
    # 下标 0 不是线段
    return dsu.count() - 1


@dataclass(frozen=True)
class LoopTableRow:
    closure: TangleClosure
    counts: Dict[str, Tuple[int, ...]]

    def pair(self) -> Tuple[Tuple[int, ...], Tuple[int, ...]]:
        return self.counts["L"], self.counts["L'"]


def r3_loop_table() -> List[LoopTableRow]:
    """
    5 个闭包 × 8 个光滑化状态在 L 和 L' 上的圈数

    Returns:
        List[LoopTableRow]: 每个闭包一行
    """
    tangles = {side: build_tangle(side) for side in SIDES}
    rows = []
    for closure in non_crossing_matchings():
        counts = {
            side: tuple(closure_loops(tangles[side], closure, state) for state in range(8))
            for side in SIDES
        }
        rows.append(LoopTableRow(closure, counts))
    return rows


def matches_reference_table(rows: Sequence[LoopTableRow]) -> bool:
    """按行内容比较（允许闭包重新编号，以及 L 与 L' 的整体互换）"""
    ours = Counter(row.pair() for row in rows)
    reference = Counter(REFERENCE_LOOP_TABLE)
    swapped = Counter((b, a) for a, b in REFERENCE_LOOP_TABLE)
    return ours == reference or ours == swapped


def _segment_colors(coloring: Dict[int, Color]) -> Dict[int, Color]:
    colors = {}
    for line, color in coloring.items():
        colors[Omega3Tangle.segment(line, "in")] = color
        colors[Omega3Tangle.segment(line, "mid")] = color.flipped()
        colors[Omega3Tangle.segment(line, "out")] = color
    return colors


def tangle_types(tangle: Omega3Tangle, line_colors: Dict[int, Color]) -> Tuple[BicolorCrossingType, ...]:
    """给定每条线入口段的颜色，三个交叉点的类型"""
    colors = _segment_colors(line_colors)
    return tuple(
        classify_slot_colors(crossing, [colors[e] for e in crossing.slots])
        for crossing in tangle.crossings
    )


def r3_coloring_table() -> Dict[str, List[Tuple[str, ...]]]:
    """
    8 种着色（线段 a、b、c 各取实线 1 或虚线 2，c 变化最快）下两侧三个交叉点的类型

    Returns:
        {"L": [...], "L'": [...]}，每项是三个类型标签
    """
    table: Dict[str, List[Tuple[str, ...]]] = {}
    for side in SIDES:
        tangle = build_tangle(side)
        rows = []
        for choice in product((Color.SOLID, Color.DOTTED), repeat=3):
            line_colors = dict(zip(COLORED_LINES, choice))
            rows.append(tuple(t.label for t in tangle_types(tangle, line_colors)))
        table[side] = rows
    return table


def all_dotted_types(side: str) -> Tuple[BicolorCrossingType, ...]:
    return tangle_types(build_tangle(side), {k: Color.DOTTED for k in range(3)})


def verify_out_equation(i: int, scheme: CoefficientScheme) -> ConstraintEntry:
    """
    第 i 个闭包的方程：Σ_状态 (三个系数之积)·d^圈数 在 L 与 L' 两侧相等，
    交叉点类型取全虚线着色下的类型

    Args:
        i: 闭包序号 1..5
        scheme: 系数方案

    Returns:
        ConstraintEntry
    """
    closures = non_crossing_matchings()
    if not 1 <= i <= len(closures):
        raise ValueError(f"闭包序号必须在 1..{len(closures)} 之间: {i}")
    closure = closures[i - 1]
    sides = {}
    for side in SIDES:
        tangle = build_tangle(side)
        weights = [scheme.weights(t.direction.value, t.sign) for t in all_dotted_types(side)]
        total = scheme.ring.zero
        for state in range(8):
            term = scheme.d ** closure_loops(tangle, closure, state)
            for k, (h, v) in enumerate(weights):
                term = term * (v if (state >> (2 - k)) & 1 else h)
            total = total + term
        sides[side] = total
    return ConstraintEntry(f"r3-closure-{i}", sides["L"], sides["L'"], sides["L"] - sides["L'"])


def omega3a_diagram(side: str, closure: Sequence[Tuple[int, int]] = ((0, 1), (2, 3), (4, 5))) -> Diagram:
    """
    用边界匹配把一侧的缠结闭合成完整图表；默认的匹配把每个出口接到相邻的入口

    Args:
        side: "L" 或 "L'"
        closure: 边界位置的配对

    Returns:
        Diagram: 三个交叉点的已定向图表
    """
    tangle = build_tangle(side)
    merged = {}
    for x, y in closure:
        merged[tangle.boundary[y]] = tangle.boundary[x]
    crossings = [
        PlanarCrossing(tuple(merged.get(e, e) for e in rays), parity)
        for rays, parity in zip(tangle.rays, tangle.over_parity)
    ]
    return diagram_from_planar(crossings, name=f"omega3a-{side}")
