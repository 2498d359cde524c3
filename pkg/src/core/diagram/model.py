"""
图表数据模型：交叉点、平面图表 (PD) 及其派生量

经典交叉点的槽位从进入的下行边开始逆时针排列 (0, 1, 2, 3)；
虚交叉点的四个槽位也是逆时针，但没有上下之分。
"""

from collections import Counter
from dataclasses import dataclass, field, replace
from enum import Enum
from typing import Dict, FrozenSet, List, Optional, Tuple

from ..utils.exceptions import DiagramValidationError
from ..utils.logger import get_logger

logger = get_logger(__name__)

Slot = Tuple[int, int]  # (交叉点下标, 槽位下标)


class CrossingKind(str, Enum):
    """交叉点种类"""
    CLASSICAL = "X"
    VIRTUAL = "P"


@dataclass(frozen=True)
class Crossing:
    """
    一个交叉点

    Attributes:
        kind: 经典或虚交叉点
        slots: 逆时针的四条边编号
        sign: 经典交叉点定向后为 +1/-1，虚交叉点为 None
    """
    kind: CrossingKind
    slots: Tuple[int, int, int, int]
    sign: Optional[int] = None

    def __post_init__(self):
        if len(self.slots) != 4:
            raise DiagramValidationError(f"交叉点必须恰有 4 个槽位: {self.slots}")
        if self.kind is CrossingKind.VIRTUAL and self.sign is not None:
            raise DiagramValidationError("虚交叉点没有符号")
        if self.sign not in (None, 1, -1):
            raise DiagramValidationError(f"符号只能是 +1 或 -1: {self.sign}")

    @property
    def is_classical(self) -> bool:
        return self.kind is CrossingKind.CLASSICAL

    def with_sign(self, sign: Optional[int]) -> "Crossing":
        return replace(self, sign=sign)

    def mirrored(self) -> "Crossing":
        """交换槽位 1 和 3：平面反射，同时经典交叉点符号取反"""
        a, b, c, d = self.slots
        sign = -self.sign if self.sign is not None else None
        return Crossing(self.kind, (a, d, c, b), sign)

    def over_in_slot(self) -> Optional[int]:
        """上行线进入的槽位：正交叉点为 3，负交叉点为 1"""
        if not self.is_classical or self.sign is None:
            return None
        return 3 if self.sign > 0 else 1

    def to_token(self, explicit_sign: bool = False) -> str:
        body = "[" + ",".join(str(e) for e in self.slots) + "]"
        if self.kind is CrossingKind.VIRTUAL:
            return "P" + body
        if explicit_sign and self.sign is not None:
            return ("X+" if self.sign > 0 else "X-") + body
        return "X" + body


@dataclass(frozen=True)
class Diagram:
    """
    平面图表

    Attributes:
        crossings: 交叉点序列
        unknot_components: 不含交叉点的圆圈个数
        incoming: 定向后每个交叉点上作为入口的槽位集合；未定向时为 None
        name: 可选名称，只用于报告
    """
    crossings: Tuple[Crossing, ...] = ()
    unknot_components: int = 0
    incoming: Optional[Tuple[FrozenSet[int], ...]] = None
    name: Optional[str] = field(default=None, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.unknot_components < 0:
            raise DiagramValidationError(f"圆圈个数不能为负: {self.unknot_components}")
        if self.incoming is not None:
            incoming = tuple(frozenset(s) for s in self.incoming)
            if len(incoming) != len(self.crossings):
                raise DiagramValidationError("入口槽位表与交叉点个数不一致")
            object.__setattr__(self, "incoming", incoming)

    # --- 派生量 ---

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    @property
    def edges(self) -> List[int]:
        return sorted({e for c in self.crossings for e in c.slots})

    @property
    def edge_count(self) -> int:
        return len(self.edges)

    @property
    def is_oriented(self) -> bool:
        return self.incoming is not None

    @property
    def is_virtual(self) -> bool:
        return any(not c.is_classical for c in self.crossings)

    def classical_indices(self) -> List[int]:
        return [i for i, c in enumerate(self.crossings) if c.is_classical]

    def occurrences(self) -> Dict[int, List[Slot]]:
        """每条边出现的 (交叉点, 槽位) 位置，按出现顺序"""
        table: Dict[int, List[Slot]] = {}
        for i, crossing in enumerate(self.crossings):
            for s, edge in enumerate(crossing.slots):
                table.setdefault(edge, []).append((i, s))
        return table

    def writhe(self) -> int:
        """所有经典交叉点符号之和；要求已定向"""
        total = 0
        for crossing in self.crossings:
            if crossing.is_classical:
                if crossing.sign is None:
                    raise DiagramValidationError("计算拧数前需要先定向")
                total += crossing.sign
        return total

    def is_head(self, crossing_index: int, slot: int) -> bool:
        """该槽位上的边是否指向这个交叉点"""
        if self.incoming is None:
            raise DiagramValidationError("图表尚未定向")
        return slot in self.incoming[crossing_index]

    # --- 序列化 ---

    def to_pd(self, explicit_signs: bool = False) -> str:
        """
        输出 PD 文本，parse_pd 的逆操作

        Args:
            explicit_signs: 是否写成 X+ / X- 形式

        Returns:
            str: PD 文本
        """
        tokens = [c.to_token(explicit_signs) for c in self.crossings]
        if self.unknot_components:
            tokens.insert(0, f"unknots={self.unknot_components}")
        return " ".join(tokens)

    def __str__(self) -> str:
        label = self.name or "diagram"
        return f"{label}: {self.to_pd() or '(empty)'}"


def validate(diagram: Diagram) -> Diagram:
    """
    校验每条边恰好出现两次且编号非负

    Args:
        diagram: 待校验的图表

    Returns:
        Diagram: 原图表

    Raises:
        DiagramValidationError: 结构无效
    """
    counts = Counter(e for c in diagram.crossings for e in c.slots)
    for edge, count in sorted(counts.items()):
        if edge < 0:
            raise DiagramValidationError(f"边编号必须非负: {edge}")
        if count == 1:
            raise DiagramValidationError(f"悬空边 {edge}：只出现了一次")
        if count != 2:
            raise DiagramValidationError(f"边 {edge} 出现了 {count} 次，应恰好两次")
    return diagram


def mirror(diagram: Diagram) -> Diagram:
    """镜像：每个交叉点交换槽位 1 和 3，符号与拧数取反"""
    incoming = None
    if diagram.incoming is not None:
        swap = {0: 0, 1: 3, 2: 2, 3: 1}
        incoming = tuple(frozenset(swap[s] for s in slots) for slots in diagram.incoming)
    name = f"{diagram.name}*" if diagram.name else None
    return Diagram(
        tuple(c.mirrored() for c in diagram.crossings),
        diagram.unknot_components,
        incoming,
        name,
    )


def disjoint_union(first: Diagram, second: Diagram) -> Diagram:
    """不相交并：第二个图表的边编号整体平移到第一个之后"""
    offset = max(first.edges, default=0) + 1
    shifted = tuple(
        Crossing(c.kind, tuple(e + offset for e in c.slots), c.sign)
        for c in second.crossings
    )
    incoming = None
    if all(d.incoming is not None or not d.crossings for d in (first, second)):
        incoming = (first.incoming or ()) + (second.incoming or ())
    return Diagram(
        first.crossings + shifted,
        first.unknot_components + second.unknot_components,
        incoming,
    )
