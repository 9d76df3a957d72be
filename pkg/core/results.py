"""
Verdict and certificate value types shared by every package
"""
from dataclasses import dataclass, field
from enum import Enum
from typing import Any, Dict, Optional

from core.graph import Graph


class Verdict(str, Enum):
    """Outcome of a checked claim on one instance"""

    VERIFIED = "VERIFIED"
    REFUTED = "REFUTED"
    INAPPLICABLE = "INAPPLICABLE"
    BUDGET = "BUDGET"

    @property
    def key(self) -> str:
        """Lower-case name used in campaign count tables"""
        return self.value.lower()


@dataclass(frozen=True)
class FailureCertificate:
    """
    Evidence that a procedure could not deliver what its claim guarantees.

    stage names the procedure step, context is the graph state at the time
    of failure and evidence holds a checkable fact, tagged by its "kind":
    witness, cycle, vertex, edge, rainbow or odd-cycle.
    """

    stage: str
    message: str
    context: Graph
    evidence: Dict[str, Any] = field(default_factory=dict)
    vertex_map: Optional[Dict[int, int]] = None

    def to_dict(self) -> Dict[str, Any]:
        from core.formats import to_graph6

        payload = {
            "stage": self.stage,
            "message": self.message,
            "context": to_graph6(self.context),
            "evidence": self.evidence,
        }
        if self.vertex_map is not None:
            payload["vertex_map"] = {str(k): v for k, v in sorted(self.vertex_map.items())}
        return payload
