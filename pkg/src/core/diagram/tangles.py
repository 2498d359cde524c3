"""
Conway 记号构造器：有理缠结、Montesinos 链环和 (2, n) 环面链环

缠结的四个端点记为 NW、NE、SW、SE。交叉点端口按逆时针 [SW, SE, NE, NW] 排列，
正扭转是 "/" 在上（端口 0、2 属于上行线），水平与竖直扭转用同一种交叉。
"""

from dataclasses import dataclass, field
from itertools import count
from typing import Dict, Iterator, List, Optional, Sequence

from .model import Diagram
from .planar import PlanarCrossing, diagram_from_planar
from ..utils.exceptions import DiagramParseError
from ..utils.logger import get_logger

logger = get_logger(__name__)

ENDS = ("NW", "NE", "SW", "SE")


@dataclass
class Tangle:
    """可变的 2-缠结：交叉点端口用整数标签，ends 给出四个端点所在的标签"""
    labels: Iterator[int]
    ports: List[List[int]] = field(default_factory=list)
    over: List[int] = field(default_factory=list)
    ends: Dict[str, int] = field(default_factory=dict)
    circles: int = 0

    @classmethod
    def zero(cls, labels: Iterator[int]) -> "Tangle":
        a, b = next(labels), next(labels)
        return cls(labels, ends={"NW": a, "NE": a, "SW": b, "SE": b})

    @classmethod
    def infinity(cls, labels: Iterator[int]) -> "Tangle":
        a, b = next(labels), next(labels)
        return cls(labels, ends={"NW": a, "SW": a, "NE": b, "SE": b})

    def twist_horizontal(self, sign: int) -> None:
        """在右侧加一个连接 NE 与 SE 的交叉点"""
        south, north = next(self.labels), next(self.labels)
        self.ports.append([self.ends["SE"], south, north, self.ends["NE"]])
        self.over.append(0 if sign > 0 else 1)
        self.ends["SE"], self.ends["NE"] = south, north

    def twist_vertical(self, sign: int) -> None:
        """在下方加一个连接 SW 与 SE 的交叉点"""
        west, east = next(self.labels), next(self.labels)
        self.ports.append([west, east, self.ends["SE"], self.ends["SW"]])
        self.over.append(0 if sign > 0 else 1)
        self.ends["SW"], self.ends["SE"] = west, east

    def reflect_diagonal(self) -> "Tangle":
        """关于 NW-SE 对角线反射：NE 与 SW 互换，各交叉点端口逆序"""
        self.ports = [[p[2], p[1], p[0], p[3]] for p in self.ports]
        self.ends["NE"], self.ends["SW"] = self.ends["SW"], self.ends["NE"]
        return self

    def merge(self, keep: int, drop: int) -> None:
        """把两个端点接起来；同一标签自接形成一个圆圈"""
        if keep == drop:
            self.circles += 1
            return
        self.ports = [[keep if x == drop else x for x in p] for p in self.ports]
        self.ends = {k: keep if v == drop else v for k, v in self.ends.items()}

    def add(self, other: "Tangle") -> "Tangle":
        """水平和：self 的 NE、SE 分别接 other 的 NW、SW"""
        joined = Tangle(self.labels, self.ports + other.ports, self.over + other.over,
                        {"NW": self.ends["NW"], "SW": self.ends["SW"],
                         "NE": other.ends["NE"], "SE": other.ends["SE"],
                         "_a": self.ends["NE"], "_b": self.ends["SE"],
                         "_c": other.ends["NW"], "_d": other.ends["SW"]},
                        self.circles + other.circles)
        joined.merge(joined.ends["_a"], joined.ends["_c"])
        joined.merge(joined.ends["_b"], joined.ends["_d"])
        for key in ("_a", "_b", "_c", "_d"):
            del joined.ends[key]
        return joined

    def numerator(self, name: Optional[str] = None) -> Diagram:
        """分子闭包：NW 接 NE，SW 接 SE"""
        self.merge(self.ends["NW"], self.ends["NE"])
        self.merge(self.ends["SW"], self.ends["SE"])
        return self._close(name)

    def denominator(self, name: Optional[str] = None) -> Diagram:
        """分母闭包：NW 接 SW，NE 接 SE"""
        self.merge(self.ends["NW"], self.ends["SW"])
        self.merge(self.ends["NE"], self.ends["SE"])
        return self._close(name)

    def _close(self, name: Optional[str]) -> Diagram:
        crossings = [PlanarCrossing(tuple(p), o) for p, o in zip(self.ports, self.over)]
        return diagram_from_planar(crossings, self.circles, name)


def parse_terms(text: str) -> List[int]:
    """
    解析有理缠结的项：空白分隔的整数（可带负号），或连写的一位数字；
    末尾的 `-` 把所有项取反。
    """
    body = text.strip()
    negate = body.endswith("-") and not body.endswith(" -")
    if negate:
        body = body[:-1].strip()
    try:
        if " " in body:
            terms = [int(t) for t in body.split()]
        elif body.startswith("-"):
            terms = [-int(ch) for ch in body[1:]]
        else:
            terms = [int(ch) for ch in body]
    except ValueError:
        raise DiagramParseError(text, f"无效的 Conway 记号: {text!r}") from None
    if not terms or any(t == 0 for t in terms):
        raise DiagramParseError(text, f"Conway 记号的项必须非零: {text!r}")
    return [-t for t in terms] if negate else terms


def rational_tangle(terms: Sequence[int], labels: Optional[Iterator[int]] = None) -> Tangle:
    """
    有理缠结 a1 a2 ... an：第 i 项在 (n - i) 为偶数时做水平扭转，否则做竖直扭转

    Args:
        terms: 非零整数项，或可由 parse_terms 解析的文本
        labels: 标签生成器，多个缠结拼接时共享

    Returns:
        Tangle
    """
    if isinstance(terms, str):
        terms = parse_terms(terms)
    labels = labels if labels is not None else count(1)
    n = len(terms)
    horizontal_first = (n - 1) % 2 == 0
    tangle = Tangle.zero(labels) if horizontal_first else Tangle.infinity(labels)
    for i, term in enumerate(terms, start=1):
        sign = 1 if term > 0 else -1
        for _ in range(abs(term)):
            if (n - i) % 2 == 0:
                tangle.twist_horizontal(sign)
            else:
                tangle.twist_vertical(sign)
    return tangle


def rational_knot(notation: str, name: Optional[str] = None) -> Diagram:
    """有理缠结的分子闭包，例如 "2 2" 是 8 字结"""
    return rational_tangle(parse_terms(notation)).numerator(name)


def montesinos(notation: str, name: Optional[str] = None) -> Diagram:
    """
    Montesinos 链环，例如 "3,1,3" 或 "23,3,2-"：
    各有理缠结关于对角线反射后水平相加，再取分子闭包

    Args:
        notation: 逗号分隔的有理缠结记号
        name: 图表名称

    Returns:
        Diagram
    """
    labels = count(1)
    parts = [p for p in notation.split(",")]
    if any(not p.strip() for p in parts):
        raise DiagramParseError(notation, f"无效的 Montesinos 记号: {notation!r}")
    total = None
    for part in parts:
        piece = rational_tangle(parse_terms(part), labels).reflect_diagonal()
        total = piece if total is None else total.add(piece)
    diagram = total.numerator(name)
    logger.info(f"由 Conway 记号 {notation!r} 构造了 {diagram.crossing_count} 个交叉点的图表")
    return diagram


def conway_diagram(notation: str, name: Optional[str] = None) -> Diagram:
    """含逗号时按 Montesinos 构造，否则按有理纽结构造"""
    if "," in notation:
        return montesinos(notation, name)
    return rational_knot(notation, name)


def torus_2(n: int, name: Optional[str] = None) -> Diagram:
    """(2, n) 环面链环：n 个水平扭转的分子闭包"""
    if n == 0:
        raise DiagramParseError(str(n), "扭转数不能为 0")
    return rational_tangle([n]).numerator(name)
