"""
Coloring module for rpgraph
Exact chromatic number, greedy baseline and partition-guided schemes
"""

from coloring.coloring import Coloring, greedy_coloring, validate_coloring
from coloring.chromatic import chromatic_number
from coloring.schemes import is_planar, planar_fc4_coloring, srp_inductive_coloring

__all__ = [
    'Coloring', 'greedy_coloring', 'validate_coloring', 'chromatic_number',
    'is_planar', 'planar_fc4_coloring', 'srp_inductive_coloring',
]
