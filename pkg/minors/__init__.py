"""
Minor detection module for rpgraph
Exact clique-minor search, Hadwiger number and minimal-minor enumeration
"""

from minors.witness import MinimalMinor, MinorWitness, verify_witness
from minors.search import find_clique_minor, hadwiger_number
from minors.minimal import (
    break_minors_by_intersection,
    enumerate_minimal_minors,
    pairwise_intersections,
)

__all__ = [
    'MinimalMinor', 'MinorWitness', 'verify_witness',
    'find_clique_minor', 'hadwiger_number',
    'enumerate_minimal_minors', 'pairwise_intersections', 'break_minors_by_intersection',
]
