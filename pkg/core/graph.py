"""
Immutable simple graph on dense vertex ids 0..order-1 and the editing
primitives every other package builds on.

Operations that relabel vertices return a RelabeledGraph carrying the
old -> new vertex map so certificates stay interpretable across edits.
"""
from dataclasses import dataclass
from functools import cached_property
from typing import Dict, FrozenSet, Iterable, List, NamedTuple, Optional, Tuple

import networkx as nx
import numpy as np

from core.errors import DomainError

VertexSet = FrozenSet[int]
Edge = Tuple[int, int]


def make_edge(u: int, v: int) -> Edge:
    """Normalize an edge to (min, max); loops are rejected"""
    if u == v:
        raise DomainError(f"self-loop at vertex {u}")
    return (u, v) if u < v else (v, u)


@dataclass(frozen=True)
class Graph:
    """Simple undirected loopless graph. Values never change after construction."""

    order: int
    adjacency: Tuple[FrozenSet[int], ...]

    def __post_init__(self):
        if self.order < 0:
            raise DomainError(f"negative order {self.order}")
        if len(self.adjacency) != self.order:
            raise DomainError("adjacency must list one neighbor set per vertex")
        for v, nbrs in enumerate(self.adjacency):
            for u in nbrs:
                if u == v:
                    raise DomainError(f"self-loop at vertex {v}")
                if not 0 <= u < self.order:
                    raise DomainError(f"neighbor {u} of vertex {v} out of range")
                if v not in self.adjacency[u]:
                    raise DomainError(f"asymmetric adjacency between {v} and {u}")

    # ==================== CONSTRUCTION ====================

    @classmethod
    def from_edges(cls, order: int, edges: Iterable[Tuple[int, int]]) -> "Graph":
        """Build a graph from an edge iterable; duplicates collapse"""
        nbrs: List[set] = [set() for _ in range(order)]
        for u, v in edges:
            if not (0 <= u < order and 0 <= v < order):
                raise DomainError(f"edge ({u}, {v}) out of range for order {order}")
            if u == v:
                raise DomainError(f"self-loop at vertex {u}")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(order, tuple(frozenset(s) for s in nbrs))

    @classmethod
    def empty(cls, order: int) -> "Graph":
        return cls(order, tuple(frozenset() for _ in range(order)))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "Graph":
        """Convert a networkx graph, relabeling nodes by sorted order"""
        if graph.is_directed() or graph.is_multigraph():
            raise DomainError("only simple undirected graphs are supported")
        nodes = sorted(graph.nodes())
        index = {node: i for i, node in enumerate(nodes)}
        return cls.from_edges(
            len(nodes),
            ((index[u], index[v]) for u, v in graph.edges() if u != v),
        )

    # ==================== QUERIES ====================

    @property
    def vertices(self) -> range:
        return range(self.order)

    def neighbors(self, v: int) -> FrozenSet[int]:
        return self.adjacency[self.check_vertex(v)]

    def degree(self, v: int) -> int:
        return len(self.neighbors(v))

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.order and v in self.adjacency[u]

    @cached_property
    def edges(self) -> Tuple[Edge, ...]:
        """All edges as sorted (u, v) pairs with u < v, ascending"""
        return tuple((u, v) for u in range(self.order) for v in sorted(self.adjacency[u]) if u < v)

    @property
    def size(self) -> int:
        return len(self.edges)

    @cached_property
    def masks(self) -> Tuple[int, ...]:
        """Neighborhoods as integer bitmasks (bit v set for neighbor v)"""
        return tuple(sum(1 << u for u in nbrs) for nbrs in self.adjacency)

    @cached_property
    def nx_view(self) -> nx.Graph:
        """Frozen networkx view with nodes 0..order-1 inserted in order"""
        graph = nx.Graph()
        graph.add_nodes_from(range(self.order))
        graph.add_edges_from(self.edges)
        return nx.freeze(graph)

    def to_networkx(self) -> nx.Graph:
        """Mutable networkx copy"""
        return nx.Graph(self.nx_view)

    def to_adjacency_matrix(self) -> np.ndarray:
        matrix = np.zeros((self.order, self.order), dtype=np.int8)
        for u, v in self.edges:
            matrix[u, v] = matrix[v, u] = 1
        return matrix

    # ==================== VALIDATION HELPERS ====================

    def check_vertex(self, v: int) -> int:
        if not isinstance(v, (int, np.integer)) or not 0 <= v < self.order:
            raise DomainError(f"vertex {v} not in graph of order {self.order}")
        return int(v)

    def check_subset(self, s: Iterable[int]) -> VertexSet:
        members = frozenset(int(v) for v in s)
        bad = [v for v in members if not 0 <= v < self.order]
        if bad:
            raise DomainError(f"vertices {sorted(bad)} not in graph of order {self.order}")
        return members

    def check_edge(self, e: Tuple[int, int]) -> Edge:
        u, v = make_edge(*e)
        if not self.has_edge(u, v):
            raise DomainError(f"edge ({u}, {v}) not present")
        return (u, v)

    def __repr__(self):
        return f"<Graph(order={self.order}, size={self.size})>"


class RelabeledGraph(NamedTuple):
    """A graph produced by an edit, with the old -> new vertex map"""

    graph: Graph
    vertex_map: Dict[int, int]

    def inverse(self) -> Dict[int, int]:
        """new -> old; for contractions the merged vertex maps to its smaller endpoint"""
        back: Dict[int, int] = {}
        for old, new in sorted(self.vertex_map.items()):
            back.setdefault(new, old)
        return back

    def lift(self, vertices: Iterable[int]) -> VertexSet:
        """Translate new vertex ids back to the original graph"""
        back = self.inverse()
        return frozenset(back[v] for v in vertices)


# ==================== EDITING ====================

def induced_subgraph(g: Graph, s: Iterable[int]) -> RelabeledGraph:
    """G[S], relabeled by the order-preserving map S -> 0..|S|-1"""
    members = sorted(g.check_subset(s))
    index = {v: i for i, v in enumerate(members)}
    adjacency = tuple(
        frozenset(index[u] for u in g.adjacency[v] if u in index) for v in members
    )
    return RelabeledGraph(Graph(len(members), adjacency), index)


def delete_vertices(g: Graph, s: Iterable[int]) -> RelabeledGraph:
    """G - S"""
    removed = g.check_subset(s)
    return induced_subgraph(g, (v for v in g.vertices if v not in removed))


def delete_edges(g: Graph, edges: Iterable[Tuple[int, int]]) -> Graph:
    """G - E'; every edge must be present"""
    removed = {g.check_edge(e) for e in edges}
    return Graph.from_edges(g.order, (e for e in g.edges if e not in removed))


def contract_edge(g: Graph, e: Tuple[int, int]) -> RelabeledGraph:
    """G / e. The merged vertex takes the smaller endpoint's place; loops and
    parallel edges that arise are dropped."""
    u, v = g.check_edge(e)
    vertex_map = {}
    for w in g.vertices:
        if w == v:
            continue
        vertex_map[w] = w if w < v else w - 1
    vertex_map[v] = vertex_map[u]
    edges = set()
    for a, b in g.edges:
        na, nb = vertex_map[a], vertex_map[b]
        if na != nb:
            edges.add(make_edge(na, nb))
    return RelabeledGraph(Graph.from_edges(g.order - 1, edges), vertex_map)


# ==================== STRUCTURE ====================

def components(g: Graph, s: Optional[Iterable[int]] = None) -> List[VertexSet]:
    """Connected classes of G (or of G[S], in original ids), ordered by minimum vertex"""
    view = g.nx_view if s is None else g.nx_view.subgraph(g.check_subset(s))
    return sorted((frozenset(c) for c in nx.connected_components(view)), key=min)


def is_connected(g: Graph, s: Optional[Iterable[int]] = None) -> bool:
    """True iff G (or G[S]) has exactly one component; the empty graph is not connected"""
    return len(components(g, s)) == 1


def edges_within(g: Graph, s: Iterable[int]) -> List[Edge]:
    members = g.check_subset(s)
    return [(u, v) for u, v in g.edges if u in members and v in members]


def find_cycle(g: Graph, s: Optional[Iterable[int]] = None) -> Optional[List[int]]:
    """A cycle of G[S] as a vertex sequence, or None when G[S] is acyclic"""
    members = g.check_subset(g.vertices if s is None else s)
    view = g.nx_view.subgraph(members)
    for start in sorted(members):
        try:
            cycle = nx.find_cycle(view, source=start)
        except nx.NetworkXNoCycle:
            continue
        return [a for a, _ in cycle]
    return None


def is_forest(g: Graph, s: Optional[Iterable[int]] = None) -> bool:
    """True iff G[S] is acyclic: |E(G[S])| = |S| - #components"""
    members = g.check_subset(g.vertices if s is None else s)
    if not members:
        return True
    return len(edges_within(g, members)) == len(members) - len(components(g, members))


def is_tree(g: Graph, s: Iterable[int]) -> bool:
    members = g.check_subset(s)
    return bool(members) and is_forest(g, members) and is_connected(g, members)


def is_independent(g: Graph, s: Iterable[int]) -> bool:
    members = g.check_subset(s)
    return all(not (g.adjacency[v] & members) for v in members)


def independence_violation(g: Graph, s: Iterable[int]) -> Optional[Edge]:
    """First edge with both endpoints in S, if any"""
    edges = edges_within(g, s)
    return edges[0] if edges else None


def neighbors_in(g: Graph, v: int, s: Iterable[int]) -> VertexSet:
    """N(v; S)"""
    return g.neighbors(v) & g.check_subset(s)


def common_neighbors_in(g: Graph, u: int, v: int, s: Iterable[int]) -> VertexSet:
    """N(u, v; S) = N(u; S) ∩ N(v; S)"""
    members = g.check_subset(s)
    return neighbors_in(g, u, members) & neighbors_in(g, v, members)


def find_odd_cycle(g: Graph, s: Optional[Iterable[int]] = None) -> Optional[List[int]]:
    """An odd cycle of G[S] as a vertex sequence, or None when G[S] is bipartite"""
    members = g.check_subset(g.vertices if s is None else s)
    depth: Dict[int, int] = {}
    parent: Dict[int, int] = {}
    for root in sorted(members):
        if root in depth:
            continue
        depth[root] = 0
        queue = [root]
        for u in queue:
            for w in sorted(g.adjacency[u] & members):
                if w not in depth:
                    depth[w] = depth[u] + 1
                    parent[w] = u
                    queue.append(w)
                elif depth[w] == depth[u] and u < w:
                    left, right = [u], [w]
                    while left[-1] != right[-1]:
                        left.append(parent[left[-1]])
                        right.append(parent[right[-1]])
                    return left + right[-2::-1]
    return None
