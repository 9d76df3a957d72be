"""
Utility module for rpgraph
JSON shaping shared by every output path
"""

from utils.serialization import ReportSerializer

__all__ = ['ReportSerializer']
