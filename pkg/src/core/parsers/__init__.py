"""
解析器模块初始化文件
"""

import os

from .base_parser import BaseParser
from .pd_parser import PDParser
from .conway_parser import ConwayParser

# 创建解析器实例
pd_parser = PDParser()
conway_parser = ConwayParser()

# 解析器列表
parsers = [
    pd_parser,
    conway_parser,
]

PARSERS_BY_FORMAT = {
    "pd": pd_parser,
    "conway": conway_parser,
}


def get_parser_for_source(source: str, fmt: str = "pd") -> BaseParser:
    """
    根据来源获取合适的解析器：文件按扩展名选择，内联文本按 fmt 选择

    Args:
        source: 文件路径或内联文本
        fmt: 内联文本的格式，"pd" 或 "conway"

    Returns:
        BaseParser: 解析器实例

    Raises:
        ValueError: 未知的格式
    """
    if os.path.isfile(source):
        for parser in parsers:
            if parser.is_supported(source):
                return parser
    if fmt not in PARSERS_BY_FORMAT:
        raise ValueError(f"不支持的图表格式: {fmt}")
    return PARSERS_BY_FORMAT[fmt]
