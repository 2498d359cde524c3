"""
系数方案模块：16 个 skein 系数加上圈值 d

系数名采用 `a_n`、`b_n`、`a'_n`、`b'_n` 形式，方向为 n、s、e、w。
不带撇号的系数用于正交叉点，带撇号的用于负交叉点。
"""

from dataclasses import dataclass, field
from typing import Any, Dict, Iterator, Mapping, Tuple

from .base_ring import BaseRing
from .field8 import F8
from .laurent import LaurentRing
from ..utils.logger import get_logger

logger = get_logger(__name__)

DIRECTIONS = ("n", "s", "e", "w")
COEFFICIENT_NAMES = tuple(
    f"{letter}{prime}_{direction}"
    for prime in ("", "'")
    for direction in DIRECTIONS
    for letter in ("a", "b")
)

SYMBOLIC_RING = LaurentRing(("a", "b", "n", "w", "e"))

# e 与 w 互换的横线对合
BAR_MAPPING = {"e": "w", "w": "e"}


@dataclass(frozen=True)
class CoefficientScheme:
    """
    skein 关系中的系数方案

    Attributes:
        family: 方案族名称，"symbolic" 或 "nor"，被改动过的方案带后缀
        ring: 系数所在的环
        values: 系数名到环元素的映射
        d: 圈值
    """
    family: str
    ring: BaseRing
    values: Mapping[str, Any] = field(repr=False)
    d: Any = None

    def __post_init__(self):
        missing = [name for name in COEFFICIENT_NAMES if name not in self.values]
        if missing:
            raise ValueError(f"系数方案缺少系数: {missing}")

    def __getitem__(self, name: str) -> Any:
        if name == "d":
            return self.d
        return self.values[name]

    def a(self, direction: str, primed: bool = False) -> Any:
        mark = "'" if primed else ""
        return self.values[f"a{mark}_{direction}"]

    def b(self, direction: str, primed: bool = False) -> Any:
        mark = "'" if primed else ""
        return self.values[f"b{mark}_{direction}"]

    def weights(self, direction: str, sign: int) -> Tuple[Any, Any]:
        """
        交叉点类型对应的 (H 系数, V 系数)

        Args:
            direction: "N"/"S"/"E"/"W"（大小写均可）
            sign: +1 或 -1

        Returns:
            (H 系数, V 系数)
        """
        direction = direction.lower()
        primed = sign < 0
        return self.a(direction, primed), self.b(direction, primed)

    def items(self) -> Iterator[Tuple[str, Any]]:
        for name in COEFFICIENT_NAMES:
            yield name, self.values[name]

    def replace(self, **changes: Any) -> "CoefficientScheme":
        """
        返回修改了若干系数的新方案，键名中的撇号写作 `p`，例如 `ap_e`

        Args:
            changes: 新的系数值；`d` 修改圈值

        Returns:
            CoefficientScheme: 新方案
        """
        values: Dict[str, Any] = dict(self.values)
        d = self.d
        for key, value in changes.items():
            if key == "d":
                d = value
                continue
            name = key[0] + "'" + key[2:] if key[1] == "p" else key
            if name not in values:
                raise KeyError(f"未知系数: {key}")
            values[name] = value
        return CoefficientScheme(f"{self.family}*", self.ring, values, d)

    def all_units(self) -> bool:
        return all(self.ring.is_unit(value) for _, value in self.items())

    def to_json(self) -> Dict[str, str]:
        data = {name: _text(value) for name, value in self.items()}
        data["d"] = _text(self.d)
        return data


def _text(value: Any) -> str:
    return value.to_text() if hasattr(value, "to_text") else str(value)


def _symbolic_scheme() -> CoefficientScheme:
    a, b, n, w, e = SYMBOLIC_RING.gens()
    unprimed = {
        "n": (n * a, n * b),
        "s": (n * a, n * b),
        "w": (w * a, w * b),
        "e": (e * a, e * b),
    }
    # 带撇号的系数是 R2 配对类型的逆：n-n、s-s、e-w、w-e
    partner = {"n": "n", "s": "s", "e": "w", "w": "e"}
    values: Dict[str, Any] = {}
    for direction in DIRECTIONS:
        values[f"a_{direction}"], values[f"b_{direction}"] = unprimed[direction]
        pa, pb = unprimed[partner[direction]]
        values[f"a'_{direction}"] = pa ** -1
        values[f"b'_{direction}"] = pb ** -1
    d = -(a * b ** -1) - b * a ** -1
    return CoefficientScheme("symbolic", SYMBOLIC_RING, values, d)


def _nor_scheme() -> CoefficientScheme:
    c = F8.from_coefficients
    values = {
        "a_n": c(1), "b_n": c(0, 1),
        "a_s": c(1), "b_s": c(0, 1),
        "a_w": c(1, 0, 1), "b_w": c(1),
        "a_e": c(1, 1), "b_e": c(0, 1, 1),
        "a'_n": c(1), "b'_n": c(1, 0, 1),
        "a'_s": c(1), "b'_s": c(1, 0, 1),
        "a'_w": c(0, 1, 1), "b'_w": c(1, 1),
        "a'_e": c(0, 1), "b'_e": c(1),
    }
    return CoefficientScheme("nor", F8, values, c(1, 1, 1))


def make_scheme(family: str) -> CoefficientScheme:
    """
    构造系数方案

    Args:
        family: "symbolic"（五个自由变量 a, b, n, w, e）或 "nor"（F8 上的取值）

    Returns:
        CoefficientScheme
    """
    family = family.lower()
    if family == "symbolic":
        scheme = _symbolic_scheme()
    elif family == "nor":
        scheme = _nor_scheme()
    else:
        raise ValueError(f"未知的系数方案: {family}")
    logger.debug(f"构造系数方案 {family}，环 {scheme.ring.name}")
    return scheme


def bar(value: Any) -> Any:
    """横线对合：符号方案中交换 e 与 w；其他环中是恒等映射"""
    if getattr(value, "ring", None) == SYMBOLIC_RING:
        return value.substitute(BAR_MAPPING)
    return value
