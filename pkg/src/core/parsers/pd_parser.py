"""
PD 文件解析器模块
"""

from typing import List, Optional

from .base_parser import BaseParser
from ..diagram import Diagram, parse_pd

# 以 '#' 开头的行是注释


class PDParser(BaseParser):
    """解析 .pd 文件或内联 PD 文本"""

    def get_supported_extensions(self) -> List[str]:
        return [".pd", ".txt"]

    def parse_text(self, text: str, name: Optional[str] = None) -> Diagram:
        lines = [line for line in text.splitlines() if not line.lstrip().startswith("#")]
        return parse_pd("\n".join(lines), name=name)
