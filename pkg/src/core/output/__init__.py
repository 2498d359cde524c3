"""
输出模块：报告渲染与写入
"""

from .report_writer import ReportWriter
