"""
Minimal clique minors, their pairwise vertex intersections, and the
edge-deletion construction that targets one edge per intersection.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import networkx as nx

from core.config import SearchConfig
from core.errors import DomainError, SearchBudgetExhausted
from core.graph import (
    Edge, Graph, VertexSet, delete_edges, delete_vertices, edges_within, is_connected, make_edge,
)
from core.results import Verdict
from minors.search import find_clique_minor
from minors.witness import MinimalMinor, MinorWitness, support_graph

logger = logging.getLogger(__name__)


def _models_on(g: Graph, subset: Sequence[int], t: int) -> Iterator[Tuple[VertexSet, ...]]:
    """K_t models whose branch sets partition exactly the given vertices"""
    blocks: List[set] = []
    k = len(subset)

    def valid() -> bool:
        sets = [frozenset(b) for b in blocks]
        if any(len(s) > 1 and not is_connected(g, s) for s in sets):
            return False
        return all(
            any(g.adjacency[v] & sets[j] for v in sets[i])
            for i in range(t) for j in range(i + 1, t)
        )

    def assign(i: int) -> Iterator[Tuple[VertexSet, ...]]:
        if len(blocks) + (k - i) < t:
            return
        if i == k:
            if valid():
                yield tuple(frozenset(b) for b in blocks)
            return
        v = subset[i]
        for block in blocks:
            block.add(v)
            yield from assign(i + 1)
            block.discard(v)
        if len(blocks) < t:
            blocks.append({v})
            yield from assign(i + 1)
            blocks.pop()

    yield from assign(0)


def iter_clique_models(g: Graph, t: int) -> Iterator[Tuple[VertexSet, ...]]:
    """
    Yield every K_t model of g as a tuple of branch sets ordered by minimum
    vertex. Models on fewer vertices come first; within a size, vertex
    subsets come in lexicographic order.
    """
    needed = t * (t - 1) // 2
    for k in range(t, g.order + 1):
        for subset in itertools.combinations(g.vertices, k):
            members = frozenset(subset)
            if len(edges_within(g, members)) < needed + k - t or not is_connected(g, members):
                continue
            yield from _models_on(g, subset, t)


def _spanning_trees(g: Graph, block: VertexSet) -> List[Tuple[Edge, ...]]:
    if len(block) == 1:
        return [()]
    sub = nx.Graph(g.nx_view.subgraph(block))
    trees = {
        tuple(sorted(make_edge(u, v) for u, v in tree.edges()))
        for tree in nx.SpanningTreeIterator(sub)
    }
    return sorted(trees)


def _connectors(g: Graph, a: VertexSet, b: VertexSet) -> List[Edge]:
    return sorted(make_edge(u, v) for u in a for v in g.adjacency[u] & b)


def _candidate_supports(g: Graph, model: Tuple[VertexSet, ...]) -> Iterator[frozenset]:
    """Tree-per-set plus connector-per-pair edge sets with no removable leaf"""
    trees = [_spanning_trees(g, block) for block in model]
    pairs = [(i, j) for i in range(len(model)) for j in range(i + 1, len(model))]
    connectors = [_connectors(g, model[i], model[j]) for i, j in pairs]
    big = frozenset().union(*(b for b in model if len(b) > 1))
    for tree_choice in itertools.product(*trees):
        for connector_choice in itertools.product(*connectors):
            edges = frozenset(itertools.chain(*tree_choice, connector_choice))
            if big:
                degree: Dict[int, int] = {}
                for u, v in edges:
                    degree[u] = degree.get(u, 0) + 1
                    degree[v] = degree.get(v, 0) + 1
                if any(degree.get(v, 0) < 2 for v in big):
                    continue
            yield edges


@dataclass(frozen=True)
class MinorEnumeration:
    """Minimal minors found, and whether the list is known to be complete"""

    minors: Tuple[MinimalMinor, ...]
    truncated: bool = False
    budget_exhausted: bool = False

    @property
    def exhaustive(self) -> bool:
        return not self.truncated

    def __len__(self):
        return len(self.minors)

    def __iter__(self):
        return iter(self.minors)


class MinimalMinorEnumerator:
    """Collects distinct minimal K_t supports of one graph"""

    def __init__(self, g: Graph, t: int, limit: Optional[int] = None, budget: Optional[int] = None):
        if t < 2:
            raise DomainError(f"minimal minors need t >= 2, got {t}")
        self.graph = g
        self.t = t
        self.limit = limit
        self.budget = SearchConfig.resolve_budget(budget)
        self.nodes = 0
        self._seen = set()

    def _charge(self, amount: int = 1):
        self.nodes += amount
        if self.nodes > self.budget:
            raise SearchBudgetExhausted(self.budget)

    def _is_minimal(self, vertices: VertexSet, edges: frozenset) -> Tuple[bool, bool]:
        """(edge-minimal, vertex-minimal) for the support subgraph"""
        h, index = support_graph(vertices, edges)
        for u, v in sorted(edges):
            self._charge()
            if find_clique_minor(delete_edges(h, [(index[u], index[v])]), self.t, self.budget) is not None:
                return False, False
        vertex_minimal = True
        for v in range(h.order):
            self._charge()
            if find_clique_minor(delete_vertices(h, [v]).graph, self.t, self.budget) is not None:
                vertex_minimal = False
                break
        return True, vertex_minimal

    def _supports(self) -> Iterator[Tuple[Tuple[VertexSet, ...], frozenset]]:
        """Distinct candidate supports with the model that produced each first"""
        for model in iter_clique_models(self.graph, self.t):
            self._charge()
            for edges in _candidate_supports(self.graph, model):
                self._charge()
                if edges in self._seen:
                    continue
                self._seen.add(edges)
                yield model, edges

    def run(self) -> MinorEnumeration:
        found: List[MinimalMinor] = []
        truncated = exhausted = False
        try:
            for model, edges in self._supports():
                edge_minimal, vertex_minimal = self._is_minimal(frozenset().union(*model), edges)
                if not edge_minimal:
                    continue
                if self.limit is not None and len(found) >= self.limit:
                    truncated = True
                    break
                found.append(MinimalMinor(MinorWitness.from_sets(model), edges, vertex_minimal))
        except SearchBudgetExhausted:
            logger.warning("minimal K_%d enumeration truncated: budget exhausted after %d nodes", self.t, self.nodes)
            truncated = exhausted = True
        if truncated:
            logger.info("minimal K_%d enumeration stopped at %d minors", self.t, len(found))
        found.sort(key=MinimalMinor.sort_key)
        return MinorEnumeration(tuple(found), truncated, exhausted)


def enumerate_minimal_minors(g: Graph, t: int, limit: Optional[int] = None,
                             budget: Optional[int] = None) -> MinorEnumeration:
    """
    All minimal K_t minors of g up to support-edge equality, sorted by
    (vertex set, support edges). Hitting the limit or the budget returns
    the partial list with truncated=True.
    """
    return MinimalMinorEnumerator(g, t, limit, budget).run()


def pairwise_intersections(minors: Sequence[MinimalMinor]) -> List[List[VertexSet]]:
    """
    A[i][j] = V_i ∩ V_j; an empty intersection falls back to A[i][j] = V_i
    and A[j][i] = V_j. The diagonal is V_i.
    """
    if not minors:
        raise DomainError("pairwise intersections need at least one minor")
    sets = [m.vertices for m in minors]
    matrix = []
    for i, vi in enumerate(sets):
        row = []
        for j, vj in enumerate(sets):
            common = vi & vj
            row.append(common if common else vi)
        matrix.append(row)
    return matrix


def distinct_intersections(matrix: List[List[VertexSet]]) -> List[VertexSet]:
    """Distinct entries of the intersection matrix in row-major order"""
    seen = []
    for row in matrix:
        for cell in row:
            if cell not in seen:
                seen.append(cell)
    return seen


@dataclass
class IntersectionBreakResult:
    graph: Graph
    deleted_edges: List[Edge]
    verdict: Verdict
    minors: Tuple[MinimalMinor, ...] = ()
    witness: Optional[MinorWitness] = None
    note: str = ""
    intersections: List[VertexSet] = field(default_factory=list)

    def to_dict(self) -> Dict:
        payload = {
            "verdict": self.verdict.value,
            "deleted_edges": [list(e) for e in self.deleted_edges],
            "intersections": [sorted(a) for a in self.intersections],
            "minor_count": len(self.minors),
            "note": self.note,
        }
        if self.witness is not None:
            payload["witness"] = self.witness.to_dict()
        return payload


def break_minors_by_intersection(g: Graph, t: int, limit: Optional[int] = None,
                                 budget: Optional[int] = None) -> IntersectionBreakResult:
    """
    Delete one edge inside each distinct intersection set G[A_k] (the first
    not yet selected edge in id order) and check whether the result is
    K_t-minor-free. The outcome is reported, not assumed.
    """
    limit = SearchConfig.CLAIM_MINOR_CAP if limit is None else limit
    enumeration = enumerate_minimal_minors(g, t, limit, budget)
    if enumeration.truncated:
        return IntersectionBreakResult(g, [], Verdict.BUDGET, enumeration.minors,
                                       note="minimal minor enumeration truncated")
    if not enumeration.minors:
        return IntersectionBreakResult(g, [], Verdict.INAPPLICABLE, note=f"no K_{t} minor")

    targets = distinct_intersections(pairwise_intersections(enumeration.minors))
    selected: List[Edge] = []
    for a in targets:
        inside = edges_within(g, a)
        if not inside:
            return IntersectionBreakResult(
                g, [], Verdict.INAPPLICABLE, enumeration.minors,
                note=f"G[{sorted(a)}] has no edge", intersections=targets,
            )
        fresh = [e for e in inside if e not in selected]
        if fresh:
            selected.append(fresh[0])

    reduced = delete_edges(g, selected)
    witness = find_clique_minor(reduced, t, budget)
    verdict = Verdict.VERIFIED if witness is None else Verdict.REFUTED
    logger.info("intersection break on %r, t=%d: %d deletions, %s", g, t, len(selected), verdict.value)
    return IntersectionBreakResult(reduced, selected, verdict, enumeration.minors, witness,
                                   intersections=targets)
