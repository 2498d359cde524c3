"""
PD 文本解析

语法：以空白分隔的项；`X[a,b,c,d]` 经典交叉点，`X+[...]` / `X-[...]` 带显式符号，
`P[...]` 虚交叉点；可选的头部 `unknots=<k>`。项之间允许逗号，整体可包在 `PD[...]` 中。
"""

import re
from typing import List, Optional

from .model import Crossing, CrossingKind, Diagram, validate
from ..utils.exceptions import DiagramParseError
from ..utils.logger import get_logger

logger = get_logger(__name__)

_TOKEN = re.compile(r"(X[+\-−]?|P)\[([^\[\]]*)\]")
_HEADER = re.compile(r"unknots\s*=\s*(\d+)")
_WRAPPER = re.compile(r"^\s*PD\s*\[(.*)\]\s*$", re.S)


def parse_pd(text: str, unknot_components: int = 0, name: Optional[str] = None) -> Diagram:
    """
    解析 PD 文本并校验

    Args:
        text: PD 文本
        unknot_components: 额外的无交叉圆圈个数，与头部 `unknots=` 相加
        name: 图表名称

    Returns:
        Diagram: 校验过的（尚未定向的）图表

    Raises:
        DiagramParseError: 项格式错误
        DiagramValidationError: 边出现次数不为 2
    """
    body = text or ""
    wrapped = _WRAPPER.match(body)
    if wrapped:
        body = wrapped.group(1)

    unknots = unknot_components
    header = _HEADER.search(body)
    if header:
        unknots += int(header.group(1))
        body = body[:header.start()] + " " + body[header.end():]

    crossings: List[Crossing] = []
    position = 0
    for match in _TOKEN.finditer(body):
        _check_gap(body[position:match.start()], text)
        crossings.append(_parse_token(match.group(1), match.group(2), match.group(0)))
        position = match.end()
    _check_gap(body[position:], text)

    diagram = validate(Diagram(tuple(crossings), unknots, name=name))
    logger.info(f"解析 PD 完成: {len(crossings)} 个交叉点, {unknots} 个圆圈")
    return diagram


def _check_gap(gap: str, source: str) -> None:
    leftover = gap.replace(",", " ").strip()
    if leftover:
        raise DiagramParseError(source, f"无法识别的项: {leftover!r}")


def _parse_token(head: str, inner: str, token: str) -> Crossing:
    parts = [p.strip() for p in inner.split(",")]
    if len(parts) != 4 or not all(p.isascii() and p.isdigit() for p in parts):
        raise DiagramParseError(token, f"交叉点需要 4 个非负整数: {token}")
    slots = tuple(int(p) for p in parts)
    if head == "P":
        return Crossing(CrossingKind.VIRTUAL, slots)
    sign = None
    if len(head) == 2:
        sign = 1 if head[1] == "+" else -1
    return Crossing(CrossingKind.CLASSICAL, slots, sign)
