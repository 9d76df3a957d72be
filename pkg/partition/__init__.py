"""
Partition module for rpgraph
Dominating forests, the critical set procedure and RP/SRP/ERP builders
"""

from partition.domination import (
    extend_to_maximal_forest,
    is_dominating,
    maximal_dominating_forest,
    maximal_induced_forest,
    two_neighbor_check,
)
from partition.critical_set import critical_set
from partition.validation import PartitionKind, PartitionResult, validate_partition
from partition.builders import build_erp, build_rp, build_srp

__all__ = [
    'extend_to_maximal_forest', 'is_dominating', 'maximal_dominating_forest',
    'maximal_induced_forest', 'two_neighbor_check', 'critical_set',
    'PartitionKind', 'PartitionResult', 'validate_partition',
    'build_erp', 'build_rp', 'build_srp',
]
