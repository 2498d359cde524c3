"""
在整张图表上检验不变性：对原图和每一步移动后的图各算一次不变量，逐步比较
"""

import random
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Callable, Dict, List, Optional, Sequence, Tuple

from ..bracket import (
    enhanced_invariant,
    jones_polynomial,
    multiset,
    normalized_bracket,
    nor_phi,
    tricolor_invariant,
)
from ..coloring import tri_count
from ..config import config
from ..diagram import Diagram, MoveKind, MoveSpec, apply_move, orient, random_move
from ..utils.logger import get_logger

logger = get_logger(__name__)


class InvariantKind(str, Enum):
    KAUFFMAN = "kauffman"
    JONES = "jones"
    ENHANCED = "enhanced"
    NOR = "nor"
    TRICOLOR = "tricolor"
    TRI = "tri"

    @classmethod
    def parse(cls, name: str) -> "InvariantKind":
        try:
            return cls(name.lower())
        except ValueError:
            supported = ", ".join(k.value for k in cls)
            raise ValueError(f"不支持的不变量: {name}（可选 {supported}）") from None


def _text_of(value: Any) -> str:
    return value.to_text()


# 每种不变量的可比较签名：多重集用文本 Counter，多项式用规范文本
SIGNATURES: Dict[InvariantKind, Callable[[Diagram], Any]] = {
    InvariantKind.KAUFFMAN: lambda d: _text_of(normalized_bracket(d)),
    InvariantKind.JONES: lambda d: _text_of(jones_polynomial(d)),
    InvariantKind.ENHANCED: lambda d: multiset(enhanced_invariant(d)),
    InvariantKind.NOR: lambda d: multiset(nor_phi(d)),
    InvariantKind.TRICOLOR: lambda d: multiset(tricolor_invariant(d)),
    InvariantKind.TRI: tri_count,
}

MOVE_GROUPS = {
    "r1": (MoveKind.R1_ADD, MoveKind.R1_REMOVE),
    "r2": (MoveKind.R2_ADD, MoveKind.R2_REMOVE),
    "r3": (MoveKind.R3,),
}


def parse_move_groups(text: str) -> Tuple[MoveKind, ...]:
    """把 "r1,r2,r3" 这样的列表展开为移动种类"""
    kinds: List[MoveKind] = []
    for part in text.split(","):
        part = part.strip().lower()
        if not part:
            continue
        if part not in MOVE_GROUPS:
            raise ValueError(f"未知的移动组: {part}（可选 r1, r2, r3）")
        kinds.extend(k for k in MOVE_GROUPS[part] if k not in kinds)
    if not kinds:
        raise ValueError("移动列表为空")
    return tuple(kinds)


@dataclass(frozen=True)
class MoveCheck:
    """一步移动后的比较结果"""
    step: int
    move: MoveSpec
    crossings: int
    equal: bool

    def to_json(self) -> Dict[str, Any]:
        return {"step": self.step, "move": str(self.move), "crossings": self.crossings, "equal": self.equal}


@dataclass
class MoveInvarianceReport:
    """
    不变性检验报告

    Attributes:
        diagram: 原图名称
        kind: 不变量种类
        baseline: 原图上的签名
        checks: 每一步的结果
    """
    diagram: str
    kind: InvariantKind
    baseline: Any = None
    checks: List[MoveCheck] = field(default_factory=list)

    @property
    def satisfied(self) -> bool:
        return all(check.equal for check in self.checks)

    def to_json(self) -> Dict[str, Any]:
        return {
            "diagram": self.diagram,
            "invariant": self.kind.value,
            "ok": self.satisfied,
            "moves": [check.to_json() for check in self.checks],
        }


def move_invariance_check(diagram: Diagram, moves: Sequence[MoveSpec],
                          kind: InvariantKind = InvariantKind.ENHANCED) -> MoveInvarianceReport:
    """
    依次做移动（累积），每一步都与原图的不变量比较

    Args:
        diagram: 原图
        moves: 移动序列，每个移动作用在上一步的结果上
        kind: 不变量种类

    Returns:
        MoveInvarianceReport

    Raises:
        InvalidMoveError: 某个移动位置不可用
    """
    kind = InvariantKind.parse(kind) if isinstance(kind, str) else kind
    signature = SIGNATURES[kind]
    current = orient(diagram)
    report = MoveInvarianceReport(diagram.name or "diagram", kind, signature(current))
    for step, move in enumerate(moves, start=1):
        current = apply_move(current, move)
        equal = signature(current) == report.baseline
        if not equal:
            logger.warning(f"{report.diagram}: 第 {step} 步移动 {move} 后 {kind.value} 不变量改变")
        report.checks.append(MoveCheck(step, move, current.crossing_count, equal))
    logger.info(f"{report.diagram}: {len(moves)} 步移动后 {kind.value} "
                f"{'保持不变' if report.satisfied else '发生变化'}")
    return report


def random_move_sequence(diagram: Diagram, count: Optional[int] = None, seed: Optional[int] = None,
                         kinds: Sequence[MoveKind] = tuple(MoveKind),
                         growth_limit: Optional[int] = None) -> List[MoveSpec]:
    """
    可复现的随机移动序列

    交叉点数超过原图加 growth_limit 后只做不增加交叉点的移动。

    Args:
        diagram: 起始图表
        count: 移动步数，默认取配置 verify.move_count
        seed: 随机种子，默认取配置 verify.seed
        kinds: 允许的移动种类
        growth_limit: 允许多出的交叉点数，默认取配置 verify.move_growth_limit

    Returns:
        List[MoveSpec]: 可以依次作用在 diagram 上的移动
    """
    count = config.get("verify", "move_count") if count is None else count
    seed = config.get("verify", "seed") if seed is None else seed
    growth_limit = config.get("verify", "move_growth_limit") if growth_limit is None else growth_limit

    rng = random.Random(seed)
    current = orient(diagram)
    limit = current.crossing_count + growth_limit
    moves = []
    for _ in range(count):
        move, current = random_move(current, rng, kinds, max_crossings=limit)
        moves.append(move)
    logger.debug(f"随机移动序列 (seed={seed}): {[str(m) for m in moves]}")
    return moves
