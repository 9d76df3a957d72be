"""
RP, SRP and ERP builders. Each returns a validated PartitionResult or
raises ConstructionFailed with a certificate; unmet hypotheses raise
PreconditionNotMet.
"""
import logging
from typing import List, Optional

from core.errors import ConstructionFailed, DomainError, PreconditionNotMet
from core.graph import Graph, VertexSet, induced_subgraph, is_forest
from core.results import FailureCertificate
from minors.search import find_clique_minor, hadwiger_number
from partition.critical_set import critical_set
from partition.domination import extend_to_maximal_forest
from partition.validation import PartitionKind, PartitionResult, validated

logger = logging.getLogger(__name__)


def _resolve_order(g: Graph, t: Optional[int], budget: Optional[int]) -> int:
    if t is not None:
        return t
    if g.order == 0:
        raise DomainError("graph has no vertices")
    return hadwiger_number(g, budget)[0]


def _require_hypothesis(g: Graph, t: int, budget: Optional[int]) -> None:
    if find_clique_minor(g, t, budget) is None:
        raise PreconditionNotMet(f"graph has no K_{t} minor")
    if find_clique_minor(g, t + 1, budget) is not None:
        raise PreconditionNotMet(f"graph has a K_{t + 1} minor")


def _certify(g: Graph, result: PartitionResult) -> PartitionResult:
    if result.valid:
        return result
    failure = next(c for c in result.failures() if c.defining)
    raise ConstructionFailed(FailureCertificate(
        "validation",
        f"{result.kind.value} condition '{failure.condition}' fails",
        g,
        dict(failure.evidence or {}, parts=[sorted(p) for p in result.parts]),
    ))


def _bipartition(g: Graph, s1: VertexSet, kind: PartitionKind, t: int, heuristic: bool,
                 budget: Optional[int]) -> PartitionResult:
    s2 = frozenset(g.vertices) - s1
    result = validated(g, PartitionResult(kind, (s1, s2), t, heuristic=heuristic), budget)
    logger.info("%s of %r with t=%d: |S_1|=%d valid=%s", kind.value, g, t, len(s1), result.valid)
    return _certify(g, result)


def build_rp(g: Graph, t: Optional[int] = None, minor_cap: Optional[int] = None,
             budget: Optional[int] = None) -> PartitionResult:
    """S_1 = critical set extended to a maximal induced forest, S_2 = the rest"""
    t = _resolve_order(g, t, budget)
    _require_hypothesis(g, t, budget)
    found = critical_set(g, t, minor_cap, budget)
    s1 = extend_to_maximal_forest(g, found.vertices)
    return _bipartition(g, s1, PartitionKind.RP, t, found.heuristic, budget)


def build_srp(g: Graph, t: Optional[int] = None, minor_cap: Optional[int] = None,
              budget: Optional[int] = None) -> PartitionResult:
    """S_1 = critical set as built, without forest extension"""
    t = _resolve_order(g, t, budget)
    _require_hypothesis(g, t, budget)
    found = critical_set(g, t, minor_cap, budget)
    return _bipartition(g, found.vertices, PartitionKind.SRP, t, found.heuristic, budget)


def build_erp(g: Graph, minor_cap: Optional[int] = None, budget: Optional[int] = None) -> PartitionResult:
    """
    Peel RP first parts until the remainder induces a forest, which becomes
    the last part. Each step uses the Hadwiger number of the remainder; the
    tail conditions are validated with n = Hadwiger number of g.
    """
    if g.order < 1:
        raise DomainError("ERP needs at least one vertex")
    n, _ = hadwiger_number(g, budget)
    remaining = frozenset(g.vertices)
    parts: List[VertexSet] = []
    heuristic = False
    while remaining:
        if is_forest(g, remaining):
            parts.append(remaining)
            break
        sub = induced_subgraph(g, remaining)
        t, _ = hadwiger_number(sub.graph, budget)
        found = critical_set(sub.graph, t, minor_cap, budget)
        heuristic = heuristic or found.heuristic
        layer = sub.lift(extend_to_maximal_forest(sub.graph, found.vertices))
        logger.debug("ERP layer %d: t=%d, %d vertices", len(parts) + 1, t, len(layer))
        parts.append(layer)
        remaining = remaining - layer

    result = _certify(g, validated(g, PartitionResult(PartitionKind.ERP, tuple(parts), n, heuristic=heuristic), budget))
    bound = max(1, n - 1)
    if result.depth > bound:
        raise ConstructionFailed(FailureCertificate(
            "depth-bound",
            f"ERP depth {result.depth} exceeds n-1 = {bound} for n = {n}",
            g,
            {"kind": "depth", "depth": result.depth, "bound": bound, "parts": [sorted(p) for p in parts]},
        ))
    return result
