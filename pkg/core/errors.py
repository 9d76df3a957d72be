"""
Exception hierarchy for rpgraph.
Verdicts are values; everything that stops an operation is one of these.
"""
from typing import Optional


class RPGraphError(Exception):
    """Base class for all rpgraph errors"""


class GraphParseError(RPGraphError, ValueError):
    """Malformed graph6 or edge-list input"""

    def __init__(self, message: str, offset: Optional[int] = None, line: Optional[int] = None):
        if offset is not None:
            message = f"{message} (byte offset {offset})"
        if line is not None:
            message = f"{message} (line {line})"
        super().__init__(message)
        self.offset = offset
        self.line = line


class OrderCapError(GraphParseError):
    """Graph order above the configured parser cap"""

    def __init__(self, order: int, cap: int):
        super().__init__(f"graph order {order} exceeds the cap of {cap} vertices")
        self.order = order
        self.cap = cap


class DomainError(RPGraphError, ValueError):
    """Argument outside an operation's domain"""


class SearchBudgetExhausted(RPGraphError):
    """The node budget of an exact search ran out before it could decide"""

    def __init__(self, nodes: int, lower_bound: Optional[int] = None, witness=None):
        message = f"search budget of {nodes} nodes exhausted"
        if lower_bound is not None:
            message += f"; best lower bound {lower_bound}"
        super().__init__(message)
        self.nodes = nodes
        self.lower_bound = lower_bound
        self.witness = witness


class PreconditionNotMet(RPGraphError):
    """The mathematical hypothesis of an operation does not hold for the input"""


class ConstructionFailed(RPGraphError):
    """A builder could not deliver the object its claim guarantees"""

    def __init__(self, certificate):
        super().__init__(f"construction failed at stage '{certificate.stage}': {certificate.message}")
        self.certificate = certificate


class OracleCapError(RPGraphError):
    """Input too large for an exact oracle"""

    def __init__(self, order: int, cap: int):
        super().__init__(
            f"exact chromatic oracle is capped at {cap} vertices (got {order}); "
            f"use greedy_coloring for an upper bound"
        )
        self.order = order
        self.cap = cap


class CampaignConfigError(RPGraphError, ValueError):
    """Invalid campaign configuration"""
