"""
Conway 记号解析器模块
"""

from typing import List, Optional

from .base_parser import BaseParser
from ..diagram import Diagram, conway_diagram
from ..utils.exceptions import DiagramParseError


class ConwayParser(BaseParser):
    """
    解析 Conway 记号：有理纽结如 "2 2"，Montesinos 链环如 "3,1,3"、"23,3,2-"。
    文件中只取第一条非注释行。
    """

    def get_supported_extensions(self) -> List[str]:
        return [".conway"]

    def parse_text(self, text: str, name: Optional[str] = None) -> Diagram:
        notation = next(
            (line.strip() for line in text.splitlines()
             if line.strip() and not line.lstrip().startswith("#")),
            "",
        )
        if not notation:
            raise DiagramParseError(text, "Conway 记号为空")
        return conway_diagram(notation, name or notation)
