"""
Exact clique-minor search and Hadwiger number.

The search branches on the fate of one vertex of the current contracted
graph: delete it, merge it with a neighbor, or freeze it as a finished
singleton branch set. Each state is (contracted graph, frozen set); failed
states are memoized. Bags track which original vertices each contracted
vertex stands for, so a clique found in the contracted graph is a witness.
"""
import logging
from typing import Dict, List, Optional, Tuple

import networkx as nx

from core.config import SearchConfig
from core.errors import DomainError, SearchBudgetExhausted
from core.graph import Graph
from minors.witness import MinorWitness

logger = logging.getLogger(__name__)


def _popcount(x: int) -> int:
    return bin(x).count("1")


def _bits(x: int):
    while x:
        low = x & -x
        yield low.bit_length() - 1
        x ^= low


def _find_clique(adj: Dict[int, int], t: int) -> Optional[List[int]]:
    """Lowest-label-first t-clique in a label -> neighbor-mask graph"""
    eligible = 0
    for v, nbrs in adj.items():
        if _popcount(nbrs) >= t - 1:
            eligible |= 1 << v
    if _popcount(eligible) < t:
        return None

    def extend(chosen: List[int], candidates: int) -> Optional[List[int]]:
        if len(chosen) == t:
            return chosen
        if len(chosen) + _popcount(candidates) < t:
            return None
        for v in _bits(candidates):
            candidates &= ~(1 << v)
            found = extend(chosen + [v], candidates & adj[v])
            if found:
                return found
        return None

    return extend([], eligible)


class CliqueMinorSearch:
    """One exact K_t minor search over a fixed host graph"""

    def __init__(self, g: Graph, t: int, budget: Optional[int] = None):
        if t < 1:
            raise DomainError(f"clique order must be at least 1, got {t}")
        self.graph = g
        self.t = t
        self.budget = SearchConfig.resolve_budget(budget)
        self.nodes = 0
        self._needed_edges = t * (t - 1) // 2
        self._failed = set()

    def run(self) -> Optional[MinorWitness]:
        g = self.graph
        if g.order < self.t:
            return None
        adj = {v: g.masks[v] for v in g.vertices}
        bags = {v: 1 << v for v in g.vertices}
        found = self._search(adj, bags, 0)
        logger.debug("K_%d search on %r finished after %d nodes", self.t, g, self.nodes)
        if found is None:
            return None
        return MinorWitness.from_sets([list(_bits(bag)) for bag in found])

    def _search(self, adj: Dict[int, int], bags: Dict[int, int], frozen: int) -> Optional[List[int]]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExhausted(self.budget)

        t = self.t
        if len(adj) < t:
            return None
        degrees = {v: _popcount(nbrs) for v, nbrs in adj.items()}
        if sum(degrees.values()) // 2 < self._needed_edges:
            return None
        for p in _bits(frozen):
            if degrees[p] < t - 1 or (frozen & ~(1 << p)) & ~adj[p]:
                return None

        clique = _find_clique(adj, t)
        if clique is not None:
            return [bags[v] for v in clique]

        key = (frozenset(bags.values()), frozenset(bags[p] for p in _bits(frozen)))
        if key in self._failed:
            return None

        free = [v for v in adj if not frozen >> v & 1]
        if free:
            v = min(free, key=lambda x: (degrees[x], x))
            for w in _bits(adj[v] & ~frozen):
                found = self._search(*_merge(adj, bags, v, w), frozen)
                if found:
                    return found
            found = self._search(*_delete(adj, bags, v), frozen)
            if found:
                return found
            if degrees[v] >= t - 1 and not frozen & ~adj[v]:
                found = self._search(adj, bags, frozen | (1 << v))
                if found:
                    return found

        self._failed.add(key)
        return None


def _delete(adj: Dict[int, int], bags: Dict[int, int], v: int) -> Tuple[Dict[int, int], Dict[int, int]]:
    bit = 1 << v
    new_adj = {u: nbrs & ~bit for u, nbrs in adj.items() if u != v}
    new_bags = {u: bag for u, bag in bags.items() if u != v}
    return new_adj, new_bags


def _merge(adj: Dict[int, int], bags: Dict[int, int], v: int, w: int) -> Tuple[Dict[int, int], Dict[int, int]]:
    keep, drop = min(v, w), max(v, w)
    both = (1 << v) | (1 << w)
    merged = (adj[v] | adj[w]) & ~both
    new_adj = {}
    for u, nbrs in adj.items():
        if u in (v, w):
            continue
        new_adj[u] = (nbrs & ~both) | (1 << keep) if nbrs & both else nbrs
    new_adj[keep] = merged
    new_bags = {u: bag for u, bag in bags.items() if u != drop}
    new_bags[keep] = bags[v] | bags[w]
    return new_adj, new_bags


def find_clique_minor(g: Graph, t: int, budget: Optional[int] = None) -> Optional[MinorWitness]:
    """
    Return a K_t minor witness of g, or None when g is K_t-minor-free.

    Raises SearchBudgetExhausted when the node budget runs out; that is
    never reported as absence.
    """
    return CliqueMinorSearch(g, t, budget).run()


def hadwiger_number(g: Graph, budget: Optional[int] = None) -> Tuple[int, MinorWitness]:
    """Largest t such that g has a K_t minor, with a witness"""
    if g.order < 1:
        raise DomainError("Hadwiger number needs at least one vertex")
    clique, size = nx.max_weight_clique(g.nx_view, weight=None)
    best = MinorWitness.from_sets([[v] for v in clique])
    t = size
    while (t + 1) * t // 2 <= g.size:
        try:
            witness = find_clique_minor(g, t + 1, budget)
        except SearchBudgetExhausted as exc:
            logger.warning("Hadwiger search stopped at K_%d: budget exhausted", t + 1)
            raise SearchBudgetExhausted(exc.nodes, lower_bound=t, witness=best) from exc
        if witness is None:
            break
        t, best = t + 1, witness
    return t, best
