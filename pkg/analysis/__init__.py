"""
Analysis module for rpgraph
Human-readable campaign tables
"""

from analysis.report_formatter import ReportFormatter

__all__ = ['ReportFormatter']
