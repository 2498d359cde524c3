"""
日志工具模块，提供统一的日志配置和获取接口
"""

import logging
import logging.handlers
import os
import sys
from typing import Optional

from ..config import config

# --- 配置常量 ---
# 日志格式: 时间 - 日志级别 - Logger名称 - 函数名 - 行号 - 消息
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(name)s - %(funcName)s:%(lineno)d - %(message)s"
# 文件日志级别 (DEBUG 及以上，记录更详细的信息到文件)
FILE_LOG_LEVEL = logging.DEBUG
# 日志文件最大大小 (10MB)
LOG_FILE_MAX_BYTES = 10 * 1024 * 1024
# 保留的旧日志文件数量
LOG_FILE_BACKUP_COUNT = 5

# --- 全局标志，防止重复配置 ---
_logging_configured = False


def setup_logging(level: Optional[str] = None, log_to_file: Optional[bool] = None) -> None:
    """
    配置全局日志记录器。
    应该在命令行入口调用一次，库代码本身从不调用。

    Args:
        level: 控制台日志级别名称，如 "DEBUG"、"INFO"；为 None 时读取配置
        log_to_file: 是否写入轮转日志文件；为 None 时读取配置
    """
    global _logging_configured
    if _logging_configured:
        return

    level_name = (level or config.get("logging", "level") or "WARNING").upper()
    console_level = getattr(logging, level_name, logging.WARNING)
    if log_to_file is None:
        log_to_file = bool(config.get("logging", "file_logging"))

    root_logger = logging.getLogger()
    # 根 logger 设为最低级别，由 handlers 控制实际输出
    root_logger.setLevel(logging.DEBUG)
    formatter = logging.Formatter(LOG_FORMAT)

    # --- 控制台输出 (stderr，避免污染 JSON 报告) ---
    console_handler = logging.StreamHandler(sys.stderr)
    console_handler.setLevel(console_level)
    console_handler.setFormatter(formatter)
    root_logger.addHandler(console_handler)

    # --- 文件输出 (RotatingFileHandler) ---
    if log_to_file:
        log_dir = config.get("logging", "log_dir") or "logs"
        log_file_path = os.path.join(log_dir, config.get("logging", "log_filename") or "skeinkit.log")
        try:
            os.makedirs(log_dir, exist_ok=True)
            file_handler = logging.handlers.RotatingFileHandler(
                log_file_path,
                maxBytes=LOG_FILE_MAX_BYTES,
                backupCount=LOG_FILE_BACKUP_COUNT,
                encoding="utf-8",
            )
            file_handler.setLevel(FILE_LOG_LEVEL)
            file_handler.setFormatter(formatter)
            root_logger.addHandler(file_handler)
        except OSError as e:
            root_logger.error(f"无法设置文件日志处理器到 '{log_file_path}': {e}", exc_info=True)

    _logging_configured = True
    root_logger.debug("日志系统已配置完成。")


def get_logger(name: str) -> logging.Logger:
    """
    获取一个指定名称的 logger 实例。
    所有通过此函数获取的 logger 都会继承 setup_logging() 设置的配置。

    Args:
        name: logger 的名称，通常使用 __name__ 获取调用模块的名称。

    Returns:
        配置好的 logger 实例。
    """
    return logging.getLogger(name)
