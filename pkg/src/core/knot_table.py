"""
纽结表模块：读取 JSONL 格式的纽结表

每行一个条目：
    {"name": "3_1", "pd": [[1,4,2,5], ...], "kinds": ["X", ...], "unknots": 0, "expected": {"tri": 9}}
或用 Conway 记号代替 PD：
    {"name": "7_4", "conway": "3,1,3", "expected": {"tri": 9}}
空行和以 '#' 开头的行被忽略。
"""

import json
import os
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

from .diagram import Diagram, conway_diagram, parse_pd
from .utils.exceptions import SkeinkitError, TableError
from .utils.logger import get_logger

logger = get_logger(__name__)

BUNDLED_TABLE = os.path.join(os.path.dirname(os.path.dirname(__file__)), "data", "knots.jsonl")

_KINDS = {"X", "X+", "X-", "P"}
_FIELDS = {"name", "pd", "kinds", "unknots", "conway", "expected"}


@dataclass
class KnotTableEntry:
    """
    纽结表条目

    Attributes:
        name: 唯一名称
        diagram: 校验过的图表
        expected: 期望值，例如 {"tri": 9, "jones": "-t^-4+t^-3+t^-1"}
        source: 原始 PD 或 Conway 记号，用于报告
    """
    name: str
    diagram: Diagram
    expected: Dict[str, Any] = field(default_factory=dict)
    source: str = ""

    def to_json(self) -> Dict[str, Any]:
        return {"name": self.name, "source": self.source, "expected": self.expected}


def _pd_text(pd: Any, kinds: Optional[List[str]]) -> str:
    if not isinstance(pd, list) or any(
        not isinstance(c, list) or len(c) != 4 or any(not isinstance(e, int) or isinstance(e, bool) for e in c)
        for c in pd
    ):
        raise ValueError("pd 必须是由四个整数组成的列表的列表")
    if kinds is None:
        kinds = ["X"] * len(pd)
    if not isinstance(kinds, list) or len(kinds) != len(pd):
        raise ValueError(f"kinds 的长度必须等于交叉点数 {len(pd)}")
    for kind in kinds:
        if kind not in _KINDS:
            raise ValueError(f"未知的交叉点种类: {kind!r}")
    return " ".join(f"{kind}[{','.join(str(e) for e in slots)}]" for kind, slots in zip(kinds, pd))


def parse_entry(record: Dict[str, Any]) -> KnotTableEntry:
    """
    校验一个 JSON 对象并构造条目

    Raises:
        ValueError: 字段缺失或类型错误
        SkeinkitError: PD 或 Conway 记号无效
    """
    if not isinstance(record, dict):
        raise ValueError("每行必须是一个 JSON 对象")
    unknown = set(record) - _FIELDS
    if unknown:
        raise ValueError(f"未知字段: {sorted(unknown)}")
    name = record.get("name")
    if not isinstance(name, str) or not name:
        raise ValueError("name 必须是非空字符串")
    if ("pd" in record) == ("conway" in record):
        raise ValueError("pd 与 conway 必须恰好给出一个")
    unknots = record.get("unknots", 0)
    if not isinstance(unknots, int) or isinstance(unknots, bool) or unknots < 0:
        raise ValueError("unknots 必须是非负整数")
    expected = record.get("expected", {})
    if not isinstance(expected, dict):
        raise ValueError("expected 必须是对象")

    if "pd" in record:
        source = _pd_text(record["pd"], record.get("kinds"))
        diagram = parse_pd(source, unknots, name=name)
    else:
        if "kinds" in record:
            raise ValueError("kinds 只能与 pd 一起使用")
        source = record["conway"]
        if not isinstance(source, str):
            raise ValueError("conway 必须是字符串")
        diagram = conway_diagram(source, name)
        if unknots:
            diagram = Diagram(diagram.crossings, diagram.unknot_components + unknots,
                              diagram.incoming, name=name)
    return KnotTableEntry(name, diagram, expected, source)


def load_table(path: str) -> List[KnotTableEntry]:
    """
    读取并校验纽结表

    Args:
        path: JSONL 文件路径

    Returns:
        List[KnotTableEntry]: 按文件顺序排列的条目

    Raises:
        TableError: 文件无法读取、JSON 无效、字段错误或名称重复，附带行号
    """
    try:
        with open(path, "r", encoding="utf-8") as f:
            lines = f.readlines()
    except IOError as e_io:
        raise TableError(path, None, f"无法读取纽结表 {path}: {e_io}") from e_io

    entries: List[KnotTableEntry] = []
    names = set()
    for number, line in enumerate(lines, start=1):
        line = line.strip()
        if not line or line.startswith("#"):
            continue
        try:
            entry = parse_entry(json.loads(line))
        except json.JSONDecodeError as e:
            raise TableError(path, number, f"JSON 无效: {e.msg}") from e
        except (ValueError, SkeinkitError) as e:
            raise TableError(path, number, str(e)) from e
        if entry.name in names:
            raise TableError(path, number, f"名称重复: {entry.name}")
        names.add(entry.name)
        entries.append(entry)

    logger.info(f"读取纽结表 {path}: {len(entries)} 个条目")
    return entries


def find_entry(entries: List[KnotTableEntry], name: str) -> Optional[KnotTableEntry]:
    return next((entry for entry in entries if entry.name == name), None)
