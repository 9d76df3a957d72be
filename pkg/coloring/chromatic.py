"""
Exact chromatic number by iterative deepening over k, and enumeration of
proper k-colorings. Both use DSATUR-style backtracking in which a vertex
may only open the next unused color, so color classes are never permuted.
"""
import logging
from typing import Dict, Iterator, Optional, Tuple

import networkx as nx

from coloring.coloring import Coloring
from core.config import ColoringConfig, SearchConfig
from core.errors import OracleCapError, SearchBudgetExhausted
from core.graph import Graph

logger = logging.getLogger(__name__)


class _ColoringSearch:
    def __init__(self, g: Graph, k: int, budget: Optional[int] = None, saturation: bool = True):
        self.graph = g
        self.k = k
        self.budget = SearchConfig.resolve_budget(budget)
        self.saturation = saturation
        self.nodes = 0
        self.colors: Dict[int, int] = {}

    def _next_vertex(self) -> int:
        g = self.graph
        uncolored = [v for v in g.vertices if v not in self.colors]
        if not self.saturation:
            return uncolored[0]
        return min(
            uncolored,
            key=lambda v: (-len({self.colors[u] for u in g.adjacency[v] if u in self.colors}), -len(g.adjacency[v]), v),
        )

    def solutions(self) -> Iterator[Dict[int, int]]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExhausted(self.budget)
        if len(self.colors) == self.graph.order:
            yield dict(self.colors)
            return
        v = self._next_vertex()
        blocked = {self.colors[u] for u in self.graph.adjacency[v] if u in self.colors}
        opened = max(self.colors.values(), default=-1) + 1
        for c in range(min(opened + 1, self.k)):
            if c in blocked:
                continue
            self.colors[v] = c
            yield from self.solutions()
            del self.colors[v]


def iter_colorings(g: Graph, k: int, budget: Optional[int] = None) -> Iterator[Dict[int, int]]:
    """Proper colorings with at most k colors, one per partition into color classes,
    vertices decided in ascending id"""
    return _ColoringSearch(g, k, budget, saturation=False).solutions()


def chromatic_number(g: Graph, budget: Optional[int] = None) -> Tuple[int, Coloring]:
    """Minimum number of colors and an optimal coloring (order capped)"""
    if g.order > ColoringConfig.ORACLE_MAX_ORDER:
        raise OracleCapError(g.order, ColoringConfig.ORACLE_MAX_ORDER)
    if g.order == 0:
        return 0, Coloring({}, 0)
    _, lower = nx.max_weight_clique(g.nx_view, weight=None)
    for k in range(lower, g.order + 1):
        search = _ColoringSearch(g, k, budget)
        found = next(search.solutions(), None)
        logger.debug("%d-coloring search on %r: %d nodes", k, g, search.nodes)
        if found is not None:
            return k, Coloring.from_assignment(found)
    raise AssertionError("a graph is always colorable with one color per vertex")
