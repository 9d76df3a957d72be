"""
Core module for rpgraph
Graph type, interchange formats, configuration and shared result types
"""
