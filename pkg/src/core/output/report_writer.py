import json
import os
import re
from typing import Any, Dict, List, Optional

from ..config import config

_UNSAFE = re.compile(r"[^A-Za-z0-9_.+\-]+")


class ReportWriter:
    """
    报告写入器，负责把报告字典渲染为文本或 JSON，并写入标准输出或文件
    """

    def render(self, report: Dict[str, Any], fmt: Optional[str] = None) -> str:
        """
        渲染报告

        Args:
            report: 报告字典
            fmt: "text" 或 "json"，默认取配置 output.format

        Returns:
            str: 渲染结果
        """
        fmt = fmt or config.get("output", "format")
        if fmt == "json":
            return json.dumps(report, ensure_ascii=False, indent=config.get("output", "indent"))
        if fmt != "text":
            raise ValueError(f"不支持的输出格式: {fmt}")
        return "\n".join(self._text_lines(report, 0))

    def _text_lines(self, value: Any, depth: int) -> List[str]:
        pad = "  " * depth
        lines = []
        if isinstance(value, dict):
            for key, item in value.items():
                if isinstance(item, (dict, list)) and item:
                    lines.append(f"{pad}{key}:")
                    lines.extend(self._text_lines(item, depth + 1))
                else:
                    lines.append(f"{pad}{key}: {self._scalar(item)}")
        elif isinstance(value, list):
            for item in value:
                if isinstance(item, dict):
                    first, *rest = self._text_lines(item, depth + 1) or [""]
                    lines.append(f"{pad}- {first.strip()}")
                    lines.extend(rest)
                else:
                    lines.append(f"{pad}- {self._scalar(item)}")
        else:
            lines.append(f"{pad}{self._scalar(value)}")
        return lines

    @staticmethod
    def _scalar(value: Any) -> str:
        if isinstance(value, bool):
            return "yes" if value else "no"
        if isinstance(value, (list, dict)):
            return json.dumps(value, ensure_ascii=False)
        return str(value)

    def report_filename(self, report: Dict[str, Any], fmt: Optional[str] = None) -> str:
        """
        报告的默认文件名：图表名加不变量（或套件名），例如 3_1-jones.json

        Args:
            report: 报告字典
            fmt: 输出格式，决定扩展名

        Returns:
            str: 只含字母、数字和 `_.+-` 的文件名
        """
        fmt = fmt or config.get("output", "format")
        parts = [str(report[key]) for key in ("diagram", "invariant", "suite", "scheme") if report.get(key)]
        stem = _UNSAFE.sub("_", "-".join(parts) or "report").strip("._") or "report"
        return f"{stem}.{'json' if fmt == 'json' else 'txt'}"

    def write(self, content: str, target: str, report: Optional[Dict[str, Any]] = None,
              fmt: Optional[str] = None) -> str:
        """
        写入报告

        Args:
            content: 渲染好的报告
            target: 文件路径；已存在的目录或以分隔符结尾时在其中按 report_filename 命名
            report: 报告字典，target 是目录时用来命名
            fmt: 输出格式

        Returns:
            str: 写入的文件路径
        """
        if os.path.isdir(target) or target.endswith(os.sep):
            target = os.path.join(target, self.report_filename(report or {}, fmt))
        directory = os.path.dirname(target)
        if directory:
            os.makedirs(directory, exist_ok=True)
        with open(target, "w", encoding="utf-8") as f:
            f.write(content)
        return target
