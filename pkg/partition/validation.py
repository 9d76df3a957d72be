"""
Partition results and the condition-by-condition validator for RP, SRP
and ERP candidates. Every failed condition carries checkable evidence.
"""
from dataclasses import dataclass, replace
from enum import Enum
from typing import Any, Dict, List, Optional, Sequence, Tuple

from core.graph import Graph, VertexSet, find_cycle, independence_violation, induced_subgraph
from minors.search import find_clique_minor
from minors.witness import MinorWitness


class PartitionKind(str, Enum):
    RP = "RP"
    SRP = "SRP"
    ERP = "ERP"

    @classmethod
    def parse(cls, name: str) -> "PartitionKind":
        return cls(name.upper())


@dataclass(frozen=True)
class ConditionCheck:
    condition: str
    passed: bool
    evidence: Optional[Dict[str, Any]] = None
    defining: bool = True

    def to_dict(self) -> Dict:
        payload = {"condition": self.condition, "pass": self.passed, "evidence": self.evidence}
        if not self.defining:
            payload["defining"] = False
        return payload


@dataclass(frozen=True)
class PartitionResult:
    kind: PartitionKind
    parts: Tuple[VertexSet, ...]
    n: int
    report: Tuple[ConditionCheck, ...] = ()
    heuristic: bool = False

    @property
    def depth(self) -> int:
        return len(self.parts)

    @property
    def valid(self) -> bool:
        """Conjunction of the defining conditions for the declared kind"""
        return bool(self.report) and all(c.passed for c in self.report if c.defining)

    def failures(self) -> List[ConditionCheck]:
        return [c for c in self.report if not c.passed]

    def to_dict(self) -> Dict:
        payload = {
            "kind": self.kind.value,
            "n": self.n,
            "parts": [sorted(p) for p in self.parts],
            "depth": self.depth,
            "report": [c.to_dict() for c in self.report],
        }
        if self.heuristic:
            payload["heuristic"] = True
        return payload

    @classmethod
    def candidate(cls, kind, parts: Sequence, n: int) -> "PartitionResult":
        return cls(PartitionKind.parse(kind) if isinstance(kind, str) else kind,
                   tuple(frozenset(p) for p in parts), n)


def _minor_free(g: Graph, s: VertexSet, t: int, condition: str, budget: Optional[int],
                defining: bool = True) -> ConditionCheck:
    """G[s] is K_t-minor-free; a t below 1 can only hold for the empty set"""
    if t < 1:
        passed = not s
        return ConditionCheck(condition, passed, None if passed else {"kind": "order", "t": t}, defining)
    sub = induced_subgraph(g, s)
    witness = find_clique_minor(sub.graph, t, budget)
    if witness is None:
        return ConditionCheck(condition, True, defining=defining)
    lifted = MinorWitness.from_sets(sub.lift(b) for b in witness.branch_sets)
    return ConditionCheck(condition, False, {"kind": "witness", "witness": lifted.to_dict()}, defining)


def _check_cover(g: Graph, parts: Tuple[VertexSet, ...]) -> ConditionCheck:
    owner: Dict[int, int] = {}
    for i, part in enumerate(parts):
        for v in sorted(part):
            if not 0 <= v < g.order:
                return ConditionCheck("partition", False, {"kind": "vertex", "vertex": v, "reason": "not in graph"})
            if v in owner:
                return ConditionCheck("partition", False, {
                    "kind": "vertex", "vertex": v, "reason": f"in parts {owner[v]} and {i}"})
            owner[v] = i
    for v in g.vertices:
        if v not in owner:
            return ConditionCheck("partition", False, {"kind": "vertex", "vertex": v, "reason": "uncovered"})
    return ConditionCheck("partition", True)


def _check_forest(g: Graph, s: VertexSet, condition: str) -> ConditionCheck:
    cycle = find_cycle(g, s)
    if cycle is None:
        return ConditionCheck(condition, True)
    return ConditionCheck(condition, False, {"kind": "cycle", "cycle": cycle})


def _check_domination(g: Graph, dominator: VertexSet, dominated: VertexSet, condition: str) -> ConditionCheck:
    for v in sorted(dominated):
        if not g.adjacency[v] & dominator:
            return ConditionCheck(condition, False, {
                "kind": "vertex", "vertex": v, "reason": "no neighbor in dominating part"})
    return ConditionCheck(condition, True)


def _check_hypothesis(g: Graph, n: int, budget: Optional[int]) -> ConditionCheck:
    """g has a K_n minor and no K_{n+1} minor"""
    if n >= 1 and find_clique_minor(g, n, budget) is None:
        return ConditionCheck("hypothesis", False, {"kind": "note", "note": f"no K_{n} minor"})
    witness = find_clique_minor(g, n + 1, budget) if n >= 0 else None
    if witness is not None:
        return ConditionCheck("hypothesis", False, {"kind": "witness", "witness": witness.to_dict()})
    return ConditionCheck("hypothesis", True)


def validate_partition(g: Graph, p: PartitionResult, budget: Optional[int] = None) -> Tuple[ConditionCheck, ...]:
    """Check every defining condition of p's kind against g"""
    parts = p.parts
    checks: List[ConditionCheck] = [_check_cover(g, parts)]
    if not checks[0].passed and any(v >= g.order or v < 0 for part in parts for v in part):
        return tuple(checks)

    if p.kind in (PartitionKind.RP, PartitionKind.SRP):
        if len(parts) != 2:
            checks.append(ConditionCheck("shape", False, {"kind": "note", "note": f"{len(parts)} parts"}))
            return tuple(checks)
        s1, s2 = parts
        if p.kind is PartitionKind.RP:
            checks.append(_check_domination(g, s1, s2, "domination"))
            checks.append(_check_forest(g, s1, "forest"))
        else:
            clash = independence_violation(g, s1)
            checks.append(ConditionCheck("independence", clash is None,
                                         None if clash is None else {"kind": "edge", "edge": list(clash)}))
        checks.append(_minor_free(g, s2, p.n, "minor-free", budget))
        checks.append(_check_hypothesis(g, p.n, budget))
        return tuple(checks)

    for i, si in enumerate(parts):
        checks.append(_check_forest(g, si, f"forest[{i + 1}]"))
    for i, si in enumerate(parts):
        for j in range(i + 1, len(parts)):
            checks.append(_check_domination(g, si, parts[j], f"domination[{i + 1},{j + 1}]"))
    for k in range(1, len(parts) + 1):
        tail = frozenset().union(*parts[k - 1:])
        order = p.n - k + 2
        checks.append(_minor_free(g, tail, order, f"tail[{k}] K_{order}-free", budget))
    checks.append(_check_hypothesis(g, p.n, budget))
    bound = max(1, p.n - 1)
    checks.append(ConditionCheck(
        "depth-bound", p.depth <= bound,
        None if p.depth <= bound else {"kind": "depth", "depth": p.depth, "bound": bound},
        defining=False,
    ))
    return tuple(checks)


def validated(g: Graph, p: PartitionResult, budget: Optional[int] = None) -> PartitionResult:
    """p with its report filled in"""
    return replace(p, report=validate_partition(g, p, budget))
