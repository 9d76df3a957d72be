"""
Clique-minor witnesses and minimal minors.

A MinorWitness lists t branch sets; it is valid in a host graph when the
sets are disjoint, nonempty, connected and pairwise joined by an edge.
"""
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

from core.graph import Edge, Graph, VertexSet, is_connected, make_edge


@dataclass(frozen=True)
class MinorWitness:
    t: int
    branch_sets: Tuple[VertexSet, ...]

    @classmethod
    def from_sets(cls, sets: Iterable[Iterable[int]]) -> "MinorWitness":
        """Build a witness with branch sets in canonical order (by minimum vertex)"""
        branch_sets = tuple(sorted((frozenset(s) for s in sets), key=lambda s: (min(s) if s else -1, sorted(s))))
        return cls(len(branch_sets), branch_sets)

    @property
    def vertices(self) -> VertexSet:
        return frozenset().union(*self.branch_sets)

    def to_dict(self) -> Dict:
        return {"t": self.t, "branch_sets": [sorted(s) for s in self.branch_sets]}

    @classmethod
    def from_dict(cls, payload: Dict) -> "MinorWitness":
        return cls(int(payload["t"]), tuple(frozenset(s) for s in payload["branch_sets"]))


def witness_violation(g: Graph, w: MinorWitness) -> Optional[str]:
    """Describe the first broken witness condition, or None when w is valid in g"""
    if w.t != len(w.branch_sets):
        return f"t={w.t} but {len(w.branch_sets)} branch sets"
    seen = set()
    for i, s in enumerate(w.branch_sets):
        if not s:
            return f"branch set {i} is empty"
        if any(not 0 <= v < g.order for v in s):
            return f"branch set {i} has a vertex outside the graph"
        if seen & s:
            return f"branch set {i} overlaps an earlier one at {sorted(seen & s)}"
        seen |= s
        if not is_connected(g, s):
            return f"branch set {i} is not connected"
    for i in range(w.t):
        for j in range(i + 1, w.t):
            if not any(g.adjacency[v] & w.branch_sets[j] for v in w.branch_sets[i]):
                return f"branch sets {i} and {j} are not adjacent"
    return None


def verify_witness(g: Graph, w: MinorWitness) -> bool:
    """True iff w is a valid K_t minor model in g"""
    return witness_violation(g, w) is None


@dataclass(frozen=True)
class MinimalMinor:
    """
    A K_t minor whose support subgraph (a spanning tree per branch set plus
    one connector per pair of sets) loses the minor when any support edge
    is deleted. vertex_minimal records the vertex-deletion analogue, which
    is computed separately rather than assumed.
    """

    witness: MinorWitness
    support_edges: FrozenSet[Edge]
    vertex_minimal: bool = True

    @property
    def t(self) -> int:
        return self.witness.t

    @property
    def vertices(self) -> VertexSet:
        return self.witness.vertices

    def sort_key(self):
        return (tuple(sorted(self.vertices)), tuple(sorted(self.support_edges)))

    def to_dict(self) -> Dict:
        payload = self.witness.to_dict()
        payload["support_edges"] = [list(e) for e in sorted(self.support_edges)]
        payload["vertex_minimal"] = self.vertex_minimal
        return payload

    @classmethod
    def from_dict(cls, payload: Dict) -> "MinimalMinor":
        return cls(
            MinorWitness.from_dict(payload),
            frozenset(make_edge(u, v) for u, v in payload["support_edges"]),
            bool(payload.get("vertex_minimal", True)),
        )


def support_graph(vertices: Iterable[int], edges: Iterable[Edge]) -> Tuple[Graph, Dict[int, int]]:
    """The subgraph formed by a support edge set, compacted to 0..k-1"""
    ordered: List[int] = sorted(set(vertices))
    index = {v: i for i, v in enumerate(ordered)}
    return Graph.from_edges(len(ordered), ((index[u], index[v]) for u, v in edges)), index
