"""
罗盘标架：把带符号的经典交叉点旋转到两条定向线都指向东方，
再把四个槽位对应到 SW、SE、NE、NW。
"""

from dataclasses import dataclass
from enum import Enum
from typing import FrozenSet, Tuple

from .model import Crossing
from ..utils.exceptions import FrameError


class Compass(str, Enum):
    SW = "SW"
    SE = "SE"
    NE = "NE"
    NW = "NW"


class Smoothing(str, Enum):
    """H 连接 {SW,SE} 与 {NW,NE}；V 连接 {SW,NW} 与 {SE,NE}"""
    H = "H"
    V = "V"


_FRAMES = {
    1: (Compass.SW, Compass.SE, Compass.NE, Compass.NW),
    -1: (Compass.NW, Compass.SW, Compass.SE, Compass.NE),
}

_PAIRS = {
    Smoothing.H: (frozenset({Compass.SW, Compass.SE}), frozenset({Compass.NW, Compass.NE})),
    Smoothing.V: (frozenset({Compass.SW, Compass.NW}), frozenset({Compass.SE, Compass.NE})),
}


@dataclass(frozen=True)
class CompassFrame:
    """槽位下标到罗盘方向的双射"""
    directions: Tuple[Compass, Compass, Compass, Compass]

    def compass(self, slot: int) -> Compass:
        return self.directions[slot]

    def slot(self, direction: Compass) -> int:
        return self.directions.index(direction)

    def compass_set(self, slots) -> FrozenSet[Compass]:
        return frozenset(self.directions[s] for s in slots)

    def reflected(self) -> "CompassFrame":
        """关于东西轴反射 (N 与 S 互换)"""
        flip = {Compass.SW: Compass.NW, Compass.NW: Compass.SW,
                Compass.SE: Compass.NE, Compass.NE: Compass.SE}
        return CompassFrame(tuple(flip[d] for d in self.directions))


def canonical_frame(crossing: Crossing) -> CompassFrame:
    """
    交叉点的规范罗盘标架

    正交叉点: 槽位 (0,1,2,3) -> (SW, SE, NE, NW)；
    负交叉点: 槽位 (0,1,2,3) -> (NW, SW, SE, NE)。

    Args:
        crossing: 带符号的经典交叉点

    Returns:
        CompassFrame

    Raises:
        FrameError: 虚交叉点或尚未定向
    """
    if not crossing.is_classical:
        raise FrameError(f"虚交叉点没有罗盘标架: {crossing.to_token()}")
    if crossing.sign is None:
        raise FrameError(f"交叉点尚未定向: {crossing.to_token()}")
    return CompassFrame(_FRAMES[crossing.sign])


def smoothing_pairs(crossing: Crossing, choice: Smoothing) -> Tuple[Tuple[int, int], Tuple[int, int]]:
    """
    光滑化后被连接的两对槽位

    Args:
        crossing: 带符号的经典交叉点
        choice: H 或 V

    Returns:
        两个槽位对
    """
    frame = canonical_frame(crossing)
    first, second = _PAIRS[choice]
    return (
        tuple(sorted(frame.slot(d) for d in first)),
        tuple(sorted(frame.slot(d) for d in second)),
    )
