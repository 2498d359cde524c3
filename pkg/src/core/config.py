"""
配置模块，存储全局配置信息
"""

import copy
import json
import logging
import os
from typing import Any


class Config:
    """配置类，管理计算引擎、验证套件和日志的全局配置"""

    def __init__(self):
        """初始化配置"""
        self.default_config = {
            # 状态和计算引擎
            "engine": {
                "max_crossings": 24,  # 2^n 个状态的可承受上限
                "tricoloring_enumeration_cap": 3 ** 8,
            },

            # 验证套件
            "verify": {
                "tolerance": 1e-6,
                "jones_tolerance": 1e-9,
                "seed": 7,
                "move_count": 20,
                "move_growth_limit": 4,  # 随机移动时允许多出的交叉点数
            },

            # 输出设置
            "output": {
                "format": "text",  # text 或 json
                "indent": 2,
            },

            # 日志设置
            "logging": {
                "level": "WARNING",  # DEBUG, INFO, WARNING, ERROR, CRITICAL
                "file_logging": False,
                "log_dir": "logs",
                "log_filename": "skeinkit.log",
            },
        }

        # 当前配置，初始为默认配置
        self.current_config = copy.deepcopy(self.default_config)

    def get(self, section: str, key: str = None) -> Any:
        """
        获取配置值

        Args:
            section: 配置节名称
            key: 配置项名称，如果为None则返回整个节

        Returns:
            配置值
        """
        if section not in self.current_config:
            return None

        if key is None:
            return self.current_config[section]

        return self.current_config[section].get(key)

    def set(self, section: str, key: str, value: Any) -> bool:
        """
        设置配置值

        Args:
            section: 配置节名称
            key: 配置项名称
            value: 配置值

        Returns:
            bool: 设置是否成功
        """
        self.current_config.setdefault(section, {})[key] = value
        return True

    def reset_to_default(self) -> None:
        """重置为默认配置"""
        self.current_config = copy.deepcopy(self.default_config)

    def load_from_file(self, file_path: str) -> bool:
        """
        从 JSON 文件加载配置，缺失的项保留默认值

        Args:
            file_path: 配置文件路径

        Returns:
            bool: 加载是否成功
        """
        try:
            with open(file_path, "r", encoding="utf-8") as f:
                loaded_config = json.load(f)
        except (OSError, ValueError) as e:
            logging.getLogger(__name__).error(f"加载配置文件失败: {e}")
            return False

        merged = copy.deepcopy(self.default_config)
        for section, section_config in loaded_config.items():
            if isinstance(section_config, dict):
                merged.setdefault(section, {}).update(section_config)
        self.current_config = merged
        return True

    def save_to_file(self, file_path: str) -> bool:
        """
        保存配置到文件

        Args:
            file_path: 配置文件路径

        Returns:
            bool: 保存是否成功
        """
        try:
            directory = os.path.dirname(file_path)
            if directory:
                os.makedirs(directory, exist_ok=True)
            with open(file_path, "w", encoding="utf-8") as f:
                json.dump(self.current_config, f, indent=4, ensure_ascii=False)
            return True
        except OSError as e:
            logging.getLogger(__name__).error(f"保存配置文件失败: {e}")
            return False


# 创建全局配置实例
config = Config()
