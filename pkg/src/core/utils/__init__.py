"""
工具模块初始化文件
"""

from .logger import get_logger, setup_logging
from .exceptions import (
    SkeinkitError,
    DiagramParseError,
    DiagramValidationError,
    OrientationError,
    FrameError,
    InvalidMoveError,
    ColoringError,
    RingMismatchError,
    AlgebraError,
    TableError,
    UsageError,
)
