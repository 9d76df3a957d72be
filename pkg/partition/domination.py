"""
Domination and induced forests
Greedy maximal induced forests, dominating forests and the two-neighbor
property of maximal dominating trees.
"""
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

from networkx.utils import UnionFind

from core.errors import ConstructionFailed, DomainError
from core.graph import Graph, VertexSet, find_cycle, is_forest, is_tree
from core.results import FailureCertificate, Verdict


def is_dominating(g: Graph, s: Iterable[int]) -> bool:
    """True iff every vertex outside s has a neighbor in s"""
    return undominated_vertex(g, s) is None


def undominated_vertex(g: Graph, s: Iterable[int]) -> Optional[int]:
    """Smallest vertex outside s with no neighbor in s"""
    members = g.check_subset(s)
    for v in g.vertices:
        if v not in members and not g.adjacency[v] & members:
            return v
    return None


def addable_vertices(g: Graph, s: Iterable[int]) -> Iterator[int]:
    """Vertices outside s whose addition keeps G[s] a forest (s must induce one)"""
    members = g.check_subset(s)
    forest = UnionFind(members)
    for u in members:
        for w in g.adjacency[u] & members:
            forest.union(u, w)
    for v in g.vertices:
        if v in members:
            continue
        roots = [forest[w] for w in g.adjacency[v] & members]
        if len(roots) == len(set(roots)):
            yield v


def is_maximal_forest(g: Graph, s: Iterable[int]) -> bool:
    members = g.check_subset(s)
    return is_forest(g, members) and next(addable_vertices(g, members), None) is None


def extend_to_maximal_forest(g: Graph, f: Iterable[int]) -> VertexSet:
    """
    Scan vertices in ascending id and add each one that keeps the induced
    subgraph acyclic. One pass suffices: a vertex rejected once closes a
    cycle with every later superset too.
    """
    members = set(g.check_subset(f))
    cycle = find_cycle(g, members)
    if cycle is not None:
        raise DomainError(f"seed set is not a forest: cycle {cycle}")
    forest = UnionFind(members)
    for u in members:
        for w in g.adjacency[u] & members:
            forest.union(u, w)
    for v in g.vertices:
        if v in members:
            continue
        roots = [forest[w] for w in g.adjacency[v] & members]
        if len(roots) == len(set(roots)):
            members.add(v)
            forest.union(v, *(g.adjacency[v] & members))
    return frozenset(members)


def maximal_induced_forest(g: Graph) -> VertexSet:
    return extend_to_maximal_forest(g, ())


def maximal_dominating_forest(g: Graph) -> VertexSet:
    """A maximal induced forest; maximality forces domination"""
    forest = maximal_induced_forest(g)
    v = undominated_vertex(g, forest)
    if v is not None:
        raise ConstructionFailed(FailureCertificate(
            "dominating-forest", f"vertex {v} has no neighbor in the maximal forest", g,
            {"kind": "vertex", "vertex": v, "forest": sorted(forest)},
        ))
    return forest


@dataclass(frozen=True)
class NeighborCheck:
    verdict: Verdict
    vertex: Optional[int] = None
    note: str = ""

    def to_dict(self):
        payload = {"verdict": self.verdict.value, "note": self.note}
        if self.vertex is not None:
            payload["vertex"] = self.vertex
        return payload


def is_maximal_dominating_tree(g: Graph, s: Iterable[int]) -> bool:
    members = g.check_subset(s)
    return is_tree(g, members) and is_dominating(g, members) and is_maximal_forest(g, members)


def two_neighbor_check(g: Graph, s: Iterable[int]) -> NeighborCheck:
    """Every vertex outside a maximal dominating tree has at least two neighbors in it"""
    members = g.check_subset(s)
    if not is_maximal_dominating_tree(g, members):
        return NeighborCheck(Verdict.INAPPLICABLE, note="s does not induce a maximal dominating tree")
    outside = [v for v in g.vertices if v not in members]
    if not outside:
        return NeighborCheck(Verdict.VERIFIED, note="no vertices outside s")
    for v in outside:
        if len(g.adjacency[v] & members) < 2:
            return NeighborCheck(Verdict.REFUTED, v, f"vertex {v} has fewer than two neighbors in s")
    return NeighborCheck(Verdict.VERIFIED)


def iter_maximal_dominating_trees(g: Graph) -> Iterator[VertexSet]:
    """Every vertex subset inducing a maximal dominating tree, by ascending bitmask"""
    for mask in range(1, 1 << g.order):
        s = frozenset(v for v in g.vertices if mask >> v & 1)
        if is_maximal_dominating_tree(g, s):
            yield s
