"""
Command-line front end for rpgraph
"""

from cli.main import build_parser, main

__all__ = ['build_parser', 'main']
