"""
Reidemeister 移动：R1 增删、R2 增删、R3

所有移动都作用在已定向的图表上，保持每个保留交叉点的符号和入口槽位，
结果做规范重编号。
"""

import random
from dataclasses import dataclass
from enum import Enum
from typing import Dict, List, Optional, Sequence, Set, Tuple

from .faces import faces
from .model import Crossing, CrossingKind, Diagram, Slot
from .orientation import orient, partner_table, renumber
from ..utils.exceptions import InvalidMoveError
from ..utils.logger import get_logger

logger = get_logger(__name__)


class MoveKind(str, Enum):
    R1_ADD = "R1-add"
    R1_REMOVE = "R1-remove"
    R2_ADD = "R2-add"
    R2_REMOVE = "R2-remove"
    R3 = "R3"


ADDING_MOVES = (MoveKind.R1_ADD, MoveKind.R2_ADD)


@dataclass(frozen=True)
class MoveSpec:
    """
    一次移动及其位置参数

    Attributes:
        move: 移动种类
        edge: 作用的边；在无交叉的圆圈上做 R1/R2 增加时为 None
        other_edge: R2 增加时的第二条边
        sign: R1 增加的扭结符号
        over_first: R1 增加时是否先经过上行线
        over: R2 增加时 edge 所在的线是否在上
        face: 多个候选面时的序号
    """
    move: MoveKind
    edge: Optional[int] = None
    other_edge: Optional[int] = None
    sign: int = 1
    over_first: bool = False
    over: bool = True
    face: int = 0

    def __str__(self) -> str:
        parts = [self.move.value]
        if self.edge is not None:
            parts.append(f"edge={self.edge}")
        if self.other_edge is not None:
            parts.append(f"other={self.other_edge}")
        if self.move is MoveKind.R1_ADD:
            parts.append(f"sign={self.sign:+d}")
            parts.append("over-first" if self.over_first else "under-first")
        if self.move is MoveKind.R2_ADD:
            parts.append("over" if self.over else "under")
        if self.face:
            parts.append(f"face={self.face}")
        return " ".join(parts)


class _Workspace:
    """可变的工作副本：交叉点、符号、入口槽位和圆圈数"""

    def __init__(self, diagram: Diagram):
        self.kinds = [c.kind for c in diagram.crossings]
        self.slots = [list(c.slots) for c in diagram.crossings]
        self.signs = [c.sign for c in diagram.crossings]
        self.incoming = [set(s) for s in diagram.incoming]
        self.unknots = diagram.unknot_components
        self.name = diagram.name
        self._next = max(diagram.edges, default=0) + 1

    def fresh(self) -> int:
        label = self._next
        self._next += 1
        return label

    def add_classical(self, rays: Sequence[int], under_in: int, over_in: int) -> None:
        """按逆时针射线添加经典交叉点，旋转使下行入口位于槽位 0"""
        slots = list(rays[under_in:]) + list(rays[:under_in])
        over_slot = (over_in - under_in) % 4
        self.kinds.append(CrossingKind.CLASSICAL)
        self.slots.append(slots)
        self.signs.append(1 if over_slot == 3 else -1)
        self.incoming.append({0, over_slot})

    def occurrences(self) -> Dict[int, List[Slot]]:
        table: Dict[int, List[Slot]] = {}
        for c, slots in enumerate(self.slots):
            for s, edge in enumerate(slots):
                table.setdefault(edge, []).append((c, s))
        return table

    def splice_out(self, removed: Set[int]) -> None:
        """删除一组交叉点，线穿过对顶槽位；闭合的链变成圆圈"""
        places = self.occurrences()

        def other(spot: Slot) -> Slot:
            first, second = places[self.slots[spot[0]][spot[1]]]
            return second if spot == first else first

        seen: Set[Slot] = set()
        for c in range(len(self.slots)):
            if c in removed:
                continue
            for s in range(4):
                if (c, s) in seen:
                    continue
                target = other((c, s))
                while target[0] in removed:
                    seen.add(target)
                    through = (target[0], (target[1] + 2) % 4)
                    seen.add(through)
                    target = other(through)
                seen.add((c, s))
                seen.add(target)
                self.slots[target[0]][target[1]] = self.slots[c][s]

        for c in removed:
            for s in range(4):
                if (c, s) in seen:
                    continue
                self.unknots += 1
                current = (c, s)
                while current not in seen:
                    seen.add(current)
                    through = (current[0], (current[1] + 2) % 4)
                    seen.add(through)
                    current = other(through)

        keep = [c for c in range(len(self.slots)) if c not in removed]
        self.kinds = [self.kinds[c] for c in keep]
        self.slots = [self.slots[c] for c in keep]
        self.signs = [self.signs[c] for c in keep]
        self.incoming = [self.incoming[c] for c in keep]

    def to_diagram(self) -> Diagram:
        crossings = tuple(
            Crossing(kind, tuple(slots), sign)
            for kind, slots, sign in zip(self.kinds, self.slots, self.signs)
        )
        return renumber(Diagram(crossings, self.unknots, tuple(self.incoming), self.name))


def _is_tail(diagram: Diagram, spot: Slot) -> bool:
    """边从这个位置离开交叉点"""
    return spot[1] not in diagram.incoming[spot[0]]


def _kink_slots(p: int, q: int, loop: int, sign: int, over_first: bool) -> Tuple[List[int], int]:
    """扭结交叉点的槽位和上行入口槽位；p 是进入的边，q 是离开的边"""
    if not over_first:
        return ([p, q, loop, loop], 3) if sign > 0 else ([p, loop, loop, q], 1)
    return ([loop, loop, q, p], 3) if sign > 0 else ([loop, p, q, loop], 1)


def _r1_add(diagram: Diagram, move: MoveSpec) -> _Workspace:
    work = _Workspace(diagram)
    if move.sign not in (1, -1):
        raise InvalidMoveError(move.move.value, f"扭结符号只能是 ±1: {move.sign}")
    if move.edge is None:
        if diagram.crossings or not diagram.unknot_components:
            raise InvalidMoveError(move.move.value, "只有在无交叉的圆圈上才能省略边")
        work.unknots -= 1
        p, loop = work.fresh(), work.fresh()
        slots, over_slot = _kink_slots(p, p, loop, move.sign, move.over_first)
    else:
        places = work.occurrences().get(move.edge)
        if not places:
            raise InvalidMoveError(move.move.value, f"边 {move.edge} 不存在")
        head = next(spot for spot in places if not _is_tail(diagram, spot))
        q, loop = work.fresh(), work.fresh()
        work.slots[head[0]][head[1]] = q
        slots, over_slot = _kink_slots(move.edge, q, loop, move.sign, move.over_first)
    work.kinds.append(CrossingKind.CLASSICAL)
    work.slots.append(slots)
    work.signs.append(move.sign)
    work.incoming.append({0, over_slot})
    return work


def _kink_crossing(diagram: Diagram, edge: int) -> Optional[int]:
    for c, crossing in enumerate(diagram.crossings):
        if not crossing.is_classical:
            continue
        for s in range(4):
            if crossing.slots[s] == edge and crossing.slots[(s + 1) % 4] == edge:
                return c
    return None


def _r1_remove(diagram: Diagram, move: MoveSpec) -> _Workspace:
    c = _kink_crossing(diagram, move.edge)
    if c is None:
        raise InvalidMoveError(move.move.value, f"边 {move.edge} 不是扭结的环")
    work = _Workspace(diagram)
    work.splice_out({c})
    return work


def _r2_candidates(diagram: Diagram, edge: int, other: int) -> List[Tuple[Slot, Slot]]:
    """与两条边都相邻的面上的 (edge 的出发位置, other 的出发位置)"""
    result = []
    for face in faces(diagram):
        e_darts = [spot for spot in face if diagram.crossings[spot[0]].slots[spot[1]] == edge]
        f_darts = [spot for spot in face if diagram.crossings[spot[0]].slots[spot[1]] == other]
        result.extend((e, f) for e in e_darts for f in f_darts)
    return result


def _r2_add(diagram: Diagram, move: MoveSpec) -> _Workspace:
    work = _Workspace(diagram)
    if move.edge is None:
        if diagram.crossings or not diagram.unknot_components:
            raise InvalidMoveError(move.move.value, "只有在无交叉的圆圈上才能省略边")
        work.unknots -= 1
        e1, e2, e3, e4 = (work.fresh() for _ in range(4))
        # 圆圈的一段推过另一段：X[3,1,4,4] X[2,1,3,2]，或其镜像
        if move.over:
            work.add_classical([e3, e1, e4, e4], 0, 3)
            work.add_classical([e2, e1, e3, e2], 0, 1)
        else:
            work.add_classical([e3, e4, e4, e1], 0, 1)
            work.add_classical([e2, e2, e3, e1], 0, 3)
        return work

    if move.other_edge is None or move.other_edge == move.edge:
        raise InvalidMoveError(move.move.value, "R2 增加需要两条不同的边")
    candidates = _r2_candidates(diagram, move.edge, move.other_edge)
    if move.face >= len(candidates):
        raise InvalidMoveError(move.move.value,
                               f"边 {move.edge} 和 {move.other_edge} 没有第 {move.face} 个公共面")
    partner = partner_table(diagram)
    e_start, f_start = candidates[move.face]
    e_end, f_end = partner[e_start], partner[f_start]
    e_forward = _is_tail(diagram, e_start)
    f_forward = _is_tail(diagram, f_start)

    e1, f1 = move.edge, move.other_edge
    e2, e_mid, f2, f_mid = work.fresh(), work.fresh(), work.fresh(), work.fresh()
    work.slots[e_end[0]][e_end[1]] = e2
    work.slots[f_end[0]][f_end[1]] = f2

    # P 靠近 e 的起点和 f 的终点，Q 靠近 e 的终点和 f 的起点
    p_rays = [f_mid, e_mid, f2, e1]
    q_rays = [f1, e_mid, f_mid, e2]
    p_e_in, q_e_in = (3, 1) if e_forward else (1, 3)
    p_f_in, q_f_in = (0, 0) if f_forward else (2, 2)
    for rays, e_in, f_in in ((p_rays, p_e_in, p_f_in), (q_rays, q_e_in, q_f_in)):
        if move.over:
            work.add_classical(rays, f_in, e_in)
        else:
            work.add_classical(rays, e_in, f_in)
    return work


def _bigon(diagram: Diagram, edge: int) -> Optional[Tuple[int, int]]:
    """含该边的、可由 R2 删除的二角形面的两个交叉点"""
    partner = partner_table(diagram)
    for face in faces(diagram):
        if len(face) != 2:
            continue
        (c1, s1), (c2, s2) = face
        if c1 == c2 or edge not in (diagram.crossings[c1].slots[s1], diagram.crossings[c2].slots[s2]):
            continue
        if not (diagram.crossings[c1].is_classical and diagram.crossings[c2].is_classical):
            continue
        # 边 (c1,s1) 的两端都在上（或都在下）才能删除
        _, far_slot = partner[(c1, s1)]
        if s1 % 2 == far_slot % 2:
            return c1, c2
    return None


def _r2_remove(diagram: Diagram, move: MoveSpec) -> _Workspace:
    pair = _bigon(diagram, move.edge)
    if pair is None:
        raise InvalidMoveError(move.move.value, f"边 {move.edge} 不在可删除的二角形上")
    work = _Workspace(diagram)
    work.splice_out(set(pair))
    return work


def _triangles(diagram: Diagram, edge: Optional[int] = None) -> List[Tuple[Slot, Slot, Slot]]:
    """可做 R3 的三角形面：三个不同的经典交叉点，且某条边在两端都在上"""
    partner = partner_table(diagram)
    result = []
    for face in faces(diagram):
        if len(face) != 3:
            continue
        crossings = {c for c, _ in face}
        if len(crossings) != 3 or not all(diagram.crossings[c].is_classical for c in crossings):
            continue
        if edge is not None and edge not in [diagram.crossings[c].slots[s] for c, s in face]:
            continue
        for spot in face:
            far = partner[spot]
            if spot[1] % 2 == 1 and far[1] % 2 == 1:
                result.append(face)
                break
    return result


def _r3(diagram: Diagram, move: MoveSpec) -> _Workspace:
    candidates = _triangles(diagram, move.edge)
    if move.face >= len(candidates):
        raise InvalidMoveError(move.move.value, f"边 {move.edge} 不在可做 R3 的三角形上")
    partner = partner_table(diagram)
    work = _Workspace(diagram)
    updates: List[Tuple[Slot, int]] = []
    for spot in candidates[move.face]:
        far = partner[spot]
        near_out = (spot[0], (spot[1] + 2) % 4)
        far_out = (far[0], (far[1] + 2) % 4)
        near_external = diagram.crossings[near_out[0]].slots[near_out[1]]
        far_external = diagram.crossings[far_out[0]].slots[far_out[1]]
        inner = work.fresh()
        # 外侧边换成新的内边，内边换成这条线另一端的外侧边
        updates += [(near_out, inner), (far_out, inner),
                    (spot, far_external), (far, near_external)]
    for (c, s), edge in updates:
        work.slots[c][s] = edge
    return work


_HANDLERS = {
    MoveKind.R1_ADD: _r1_add,
    MoveKind.R1_REMOVE: _r1_remove,
    MoveKind.R2_ADD: _r2_add,
    MoveKind.R2_REMOVE: _r2_remove,
    MoveKind.R3: _r3,
}


def apply_move(diagram: Diagram, move: MoveSpec) -> Diagram:
    """
    对图表做一次 Reidemeister 移动

    Args:
        diagram: 图表（未定向时先定向）
        move: 移动及其位置

    Returns:
        Diagram: 规范重编号后的新图表

    Raises:
        InvalidMoveError: 找不到局部模式或位置无效
    """
    diagram = orient(diagram)
    if move.move is not MoveKind.R1_ADD and move.move is not MoveKind.R2_ADD and move.edge is None:
        raise InvalidMoveError(move.move.value, "需要指定边")
    result = _HANDLERS[move.move](diagram, move).to_diagram()
    logger.debug(f"应用移动 {move}: {diagram.crossing_count} -> {result.crossing_count} 个交叉点")
    return result


def enumerate_move_sites(diagram: Diagram, kind: MoveKind) -> List[MoveSpec]:
    """
    列出某种移动的所有可用位置

    Args:
        diagram: 图表
        kind: 移动种类

    Returns:
        List[MoveSpec]: 按确定顺序排列的移动
    """
    diagram = orient(diagram)
    sites: List[MoveSpec] = []
    if kind is MoveKind.R1_ADD:
        edges: Sequence[Optional[int]] = diagram.edges
        if not diagram.crossings and diagram.unknot_components:
            edges = [None]
        for edge in edges:
            for sign in (1, -1):
                for over_first in (False, True):
                    sites.append(MoveSpec(kind, edge, sign=sign, over_first=over_first))
    elif kind is MoveKind.R1_REMOVE:
        sites = [MoveSpec(kind, e) for e in diagram.edges if _kink_crossing(diagram, e) is not None]
    elif kind is MoveKind.R2_ADD:
        if not diagram.crossings and diagram.unknot_components:
            sites = [MoveSpec(kind, over=over) for over in (True, False)]
        seen = set()
        for face in faces(diagram):
            face_edges = [diagram.crossings[c].slots[s] for c, s in face]
            for e in face_edges:
                for f in face_edges:
                    if e == f or (e, f) in seen:
                        continue
                    seen.add((e, f))
                    for index in range(len(_r2_candidates(diagram, e, f))):
                        for over in (True, False):
                            sites.append(MoveSpec(kind, e, f, over=over, face=index))
    elif kind is MoveKind.R2_REMOVE:
        sites = [MoveSpec(kind, e) for e in diagram.edges if _bigon(diagram, e) is not None]
    elif kind is MoveKind.R3:
        for e in diagram.edges:
            sites.extend(MoveSpec(kind, e, face=i) for i in range(len(_triangles(diagram, e))))
    return sites


def random_move(diagram: Diagram, rng: random.Random,
                kinds: Sequence[MoveKind] = tuple(MoveKind),
                max_crossings: Optional[int] = None) -> Tuple[MoveSpec, Diagram]:
    """
    随机选一种有可用位置的移动，再随机选一个位置

    Args:
        diagram: 图表
        rng: 随机数生成器（决定可复现性）
        kinds: 允许的移动种类
        max_crossings: 达到该交叉点数后优先做不增加交叉点的移动

    Returns:
        (MoveSpec, Diagram): 所做的移动和结果

    Raises:
        InvalidMoveError: 没有任何可用的移动
    """
    diagram = orient(diagram)
    capped = max_crossings is not None and diagram.crossing_count >= max_crossings
    options: Dict[MoveKind, List[MoveSpec]] = {}
    for kind in kinds:
        if capped and kind in ADDING_MOVES:
            continue
        sites = enumerate_move_sites(diagram, kind)
        if sites:
            options[kind] = sites
    if not options and capped:
        # 达到上限后没有可删除或 R3 的位置，只能继续增加
        logger.debug(f"{diagram.crossing_count} 个交叉点时没有不增加交叉点的移动，放宽上限")
        return random_move(diagram, rng, kinds)
    if not options:
        raise InvalidMoveError("random", "没有可用的移动位置")
    kind = rng.choice(sorted(options, key=lambda k: k.value))
    move = rng.choice(options[kind])
    return move, apply_move(diagram, move)
