"""
基础解析器模块，定义所有图表来源解析器的基类和通用接口
"""

import os
from abc import ABC, abstractmethod
from typing import List, Optional, Tuple

from ..diagram import Diagram
from ..utils.exceptions import DiagramParseError
from ..utils.logger import get_logger

# 获取 logger 实例
logger = get_logger(__name__)


class BaseParser(ABC):
    """
    解析器基类。来源既可以是文件路径，也可以是内联文本
    """

    @abstractmethod
    def parse_text(self, text: str, name: Optional[str] = None) -> Diagram:
        """
        解析文本内容

        Args:
            text: 文本内容
            name: 图表名称

        Returns:
            Diagram: 校验过的图表
        """
        pass

    @abstractmethod
    def get_supported_extensions(self) -> List[str]:
        """
        获取支持的文件扩展名列表

        Returns:
            List[str]: 支持的文件扩展名列表，如['.pd']
        """
        pass

    def is_supported(self, file_path: str) -> bool:
        _, ext = os.path.splitext(file_path)
        return ext.lower() in self.get_supported_extensions()

    def extract_title(self, file_path: str) -> str:
        """从文件路径中提取标题，用作图表名称"""
        base_name = os.path.basename(file_path)
        title, _ = os.path.splitext(base_name)
        return title

    def read_source(self, source: str) -> Tuple[str, Optional[str]]:
        """
        读取来源：存在的文件按 UTF-8 读取，否则把 source 本身当作内联文本

        Returns:
            (文本, 名称)；内联文本没有名称

        Raises:
            DiagramParseError: 文件无法读取或解码
        """
        if not os.path.isfile(source):
            return source, None
        logger.debug(f"读取图表文件: {source}")
        try:
            with open(source, "r", encoding="utf-8") as f:
                return f.read(), self.extract_title(source)
        except UnicodeDecodeError as e_decode:
            raise DiagramParseError(source, f"文件编码无法识别 (UTF-8): {e_decode}") from e_decode
        except IOError as e_io:
            raise DiagramParseError(source, f"读取文件时发生IO错误: {e_io}") from e_io

    def parse(self, source: str, name: Optional[str] = None) -> Diagram:
        """
        解析文件或内联文本

        Args:
            source: 文件路径或内联文本
            name: 图表名称，默认取文件名

        Returns:
            Diagram
        """
        text, title = self.read_source(source)
        diagram = self.parse_text(text, name or title)
        logger.info(f"{self.__class__.__name__} 解析完成: {diagram.name or '内联图表'}")
        return diagram
