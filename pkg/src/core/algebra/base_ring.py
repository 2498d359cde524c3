"""
基础环模块，定义状态和引擎使用的系数环的通用接口
"""

from abc import ABC, abstractmethod
from typing import Any


class BaseRing(ABC):
    """
    系数环基类。状态和引擎只通过这里的接口取零元和单位元，
    因此同一个引擎可以在 Laurent 多项式环和 F8 上运行。
    """

    @property
    @abstractmethod
    def name(self) -> str:
        """环的简短名称，用于日志和报告"""
        pass

    @property
    @abstractmethod
    def zero(self) -> Any:
        """加法单位元"""
        pass

    @property
    @abstractmethod
    def one(self) -> Any:
        """乘法单位元"""
        pass

    @abstractmethod
    def contains(self, element: Any) -> bool:
        """
        判断元素是否属于本环

        Args:
            element: 待检查的元素

        Returns:
            bool: 是否属于本环
        """
        pass

    @abstractmethod
    def parse(self, text: str) -> Any:
        """
        从规范文本形式解析元素

        Args:
            text: 文本形式

        Returns:
            环中的元素
        """
        pass

    def is_unit(self, element: Any) -> bool:
        """判断元素是否可逆，子类可覆盖"""
        try:
            element ** -1
        except ZeroDivisionError:
            return False
        return True

    def __repr__(self) -> str:
        return f"<{self.__class__.__name__} {self.name}>"
