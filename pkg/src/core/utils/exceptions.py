"""
异常处理模块，定义自定义异常类
"""

from typing import Optional


class SkeinkitError(Exception):
    """skeinkit 基础异常类"""
    pass


class DiagramParseError(SkeinkitError):
    """PD 代码解析错误"""
    def __init__(self, source: str, message: str = None):
        self.source = source
        self.message = message or f"无法解析 PD 代码: {source!r}"
        super().__init__(self.message)


class DiagramValidationError(SkeinkitError):
    """图表结构校验错误（边出现次数、悬空边等）"""
    def __init__(self, message: str = None):
        self.message = message or "图表结构无效"
        super().__init__(self.message)


class OrientationError(SkeinkitError):
    """定向推断失败：编号不连续或与显式符号冲突"""
    def __init__(self, message: str = None):
        self.message = message or "无法从编号推断上跨线方向"
        super().__init__(self.message)


class FrameError(SkeinkitError):
    """只有带符号的经典交叉点才有罗盘标架"""
    def __init__(self, message: str = None):
        self.message = message or "虚交叉点或未定向的交叉点没有罗盘标架"
        super().__init__(self.message)


class InvalidMoveError(SkeinkitError):
    """Reidemeister 移动的位置无效或找不到局部模式"""
    def __init__(self, move: str, message: str = None):
        self.move = move
        self.message = message or f"无法应用移动: {move}"
        super().__init__(self.message)


class ColoringError(SkeinkitError):
    """着色不属于该图表或违反完整性"""
    def __init__(self, message: str = None):
        self.message = message or "着色完整性错误"
        super().__init__(self.message)


class RingMismatchError(SkeinkitError):
    """不同环的元素之间的运算"""
    def __init__(self, message: str = None):
        self.message = message or "环不匹配"
        super().__init__(self.message)


class AlgebraError(SkeinkitError, ZeroDivisionError):
    """非单项式的负幂、零的逆、零代入负指数"""
    def __init__(self, message: str = None):
        self.message = message or "代数运算无定义"
        super().__init__(self.message)


class TableError(SkeinkitError):
    """纽结表文件格式错误"""
    def __init__(self, path: str, line: Optional[int] = None, message: str = None):
        self.path = path
        self.line = line
        location = f"{path}:{line}" if line is not None else path
        self.message = f"{location}: {message}" if message else f"纽结表格式错误: {location}"
        super().__init__(self.message)


class UsageError(SkeinkitError):
    """命令行用法错误"""
    def __init__(self, message: str = None):
        self.message = message or "命令行参数无效"
        super().__init__(self.message)
