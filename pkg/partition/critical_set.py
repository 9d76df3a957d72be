"""
Critical set procedure: pick an independent vertex set F, one vertex per
minimal K_t minor, whose deletion leaves the graph K_t-minor-free.

Each round recomputes the minimal minors of the current graph, takes them
in order of sorted vertex set, and deletes one vertex of the first minor
whose other minors' vertices (P_j = V_j - V_i) lie in one component of
G - V_i. The vertex picked is the smallest one of V_i with no neighbor
outside V_i. Where that vertex is missing, or no minor qualifies, the
procedure stops with a certificate instead of improvising.
"""
import logging
from dataclasses import dataclass, field
from typing import Dict, List, Optional, Set

import networkx as nx

from core.config import SearchConfig
from core.errors import ConstructionFailed, PreconditionNotMet, SearchBudgetExhausted
from core.graph import (
    Graph, VertexSet, components, delete_vertices, find_odd_cycle, independence_violation,
    induced_subgraph,
)
from core.results import FailureCertificate
from minors.minimal import enumerate_minimal_minors
from minors.search import find_clique_minor
from minors.witness import MinimalMinor, MinorWitness

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class CriticalSetResult:
    vertices: VertexSet
    picks: tuple = ()
    rounds: int = 0
    heuristic: bool = False
    initial_minors: int = 0
    pairwise_disjoint: bool = False
    log: tuple = field(default_factory=tuple)

    def to_dict(self) -> Dict:
        return {
            "vertices": sorted(self.vertices),
            "picks": list(self.picks),
            "rounds": self.rounds,
            "heuristic": self.heuristic,
            "initial_minors": self.initial_minors,
        }


def _lift(minor: MinimalMinor, back: Dict[int, int]) -> VertexSet:
    return frozenset(back[v] for v in minor.vertices)


class CriticalSetBuilder:
    """Runs the procedure on snapshots of one graph"""

    def __init__(self, g: Graph, t: int, minor_cap: Optional[int] = None, budget: Optional[int] = None):
        self.graph = g
        self.t = t
        self.minor_cap = SearchConfig.MINIMAL_MINOR_CAP if minor_cap is None else minor_cap
        self.budget = SearchConfig.resolve_budget(budget)
        self.alive: Set[int] = set(g.vertices)
        self.picks: List[int] = []
        self.log: List[str] = []

    def _fail(self, stage: str, message: str, evidence: Dict) -> ConstructionFailed:
        evidence = dict(evidence, removed=sorted(self.picks))
        logger.warning("critical set failed at %s: %s", stage, message)
        return ConstructionFailed(FailureCertificate(stage, message, self.graph, evidence, None))

    def _current_minors(self):
        sub = induced_subgraph(self.graph, self.alive)
        back = sub.inverse()
        enumeration = enumerate_minimal_minors(sub.graph, self.t, self.minor_cap, self.budget)
        if enumeration.budget_exhausted:
            raise SearchBudgetExhausted(self.budget)
        vertex_sets = sorted((_lift(m, back) for m in enumeration.minors), key=sorted)
        return vertex_sets, enumeration.truncated

    def _select(self, vertex_sets: List[VertexSet], round_no: int) -> Optional[int]:
        for i, vi in enumerate(vertex_sets):
            others = frozenset().union(*(vj - vi for j, vj in enumerate(vertex_sets) if j != i))
            if others:
                rest = self.alive - vi
                if not any(others <= comp for comp in components(self.graph, rest)):
                    continue
            qualifying = [v for v in sorted(vi) if self.graph.adjacency[v] & self.alive <= vi]
            if not qualifying:
                raise self._fail(
                    "vertex-selection",
                    f"round {round_no}: every vertex of minor {sorted(vi)} has a neighbor outside it",
                    {"kind": "adjacency", "round": round_no, "minor": sorted(vi),
                     "outside_neighbors": {str(v): sorted(self.graph.adjacency[v] & self.alive - vi)
                                           for v in sorted(vi)}},
                )
            self.log.append(f"round {round_no}: minor {sorted(vi)} -> vertex {qualifying[0]}")
            return qualifying[0]
        return None

    def _heuristic(self) -> None:
        """Greedy independent removal guided by exact witnesses"""
        while True:
            sub = induced_subgraph(self.graph, self.alive)
            witness = find_clique_minor(sub.graph, self.t, self.budget)
            if witness is None:
                return
            lifted = sub.lift(witness.vertices)
            taken = frozenset(self.picks)
            qualifying = [v for v in sorted(lifted) if not self.graph.adjacency[v] & taken]
            if not qualifying:
                raise self._fail(
                    "heuristic",
                    "every vertex of a remaining K_t minor touches the chosen set",
                    {"kind": "witness", "witness": MinorWitness.from_sets(
                        sub.lift(b) for b in witness.branch_sets).to_dict()},
                )
            self.picks.append(qualifying[0])
            self.alive.discard(qualifying[0])
            self.log.append(f"heuristic: vertex {qualifying[0]}")

    def run(self) -> CriticalSetResult:
        g, t = self.graph, self.t
        if t == 1:
            return self._run_trivial()
        if t == 2:
            return self._run_bipartite()

        vertex_sets, truncated = self._current_minors()
        initial = len(vertex_sets)
        disjoint = all(not (a & b) for i, a in enumerate(vertex_sets) for b in vertex_sets[i + 1:])
        heuristic = False
        rounds = 0
        while vertex_sets:
            if truncated:
                logger.warning("minimal minor cap %d reached; switching to heuristic mode", self.minor_cap)
                heuristic = True
                self._heuristic()
                break
            rounds += 1
            if rounds > g.order:
                raise self._fail("halting", f"no halt after {g.order} rounds", {"kind": "rounds", "rounds": rounds})
            v = self._select(vertex_sets, rounds)
            if v is None:
                raise self._fail(
                    "round",
                    f"round {rounds}: no minimal minor passes the one-component test",
                    {"kind": "minors", "round": rounds, "minors": [sorted(s) for s in vertex_sets]},
                )
            self.picks.append(v)
            self.alive.discard(v)
            logger.debug("critical set round %d removed vertex %d", rounds, v)
            vertex_sets, truncated = self._current_minors()

        chosen = frozenset(self.picks)
        clash = independence_violation(g, chosen)
        if clash is not None:
            raise self._fail("independence", f"chosen vertices {list(clash)} are adjacent",
                             {"kind": "edge", "edge": list(clash)})
        remainder = delete_vertices(g, chosen)
        witness = find_clique_minor(remainder.graph, t, self.budget)
        if witness is not None:
            raise self._fail(
                "minor-free",
                f"no minimal K_{t} minors remain but a K_{t} minor does",
                {"kind": "witness", "witness": MinorWitness.from_sets(
                    remainder.lift(b) for b in witness.branch_sets).to_dict()},
            )
        return CriticalSetResult(chosen, tuple(self.picks), rounds, heuristic, initial, disjoint, tuple(self.log))

    def _run_trivial(self) -> CriticalSetResult:
        g = self.graph
        if g.size:
            raise self._fail("t=1", "an independent set cannot cover a graph with edges",
                             {"kind": "edge", "edge": list(g.edges[0])})
        return CriticalSetResult(frozenset(g.vertices), tuple(g.vertices), 0, False, g.order, True)

    def _run_bipartite(self) -> CriticalSetResult:
        g = self.graph
        cycle = find_odd_cycle(g)
        if cycle is not None:
            raise self._fail("bipartition", "an odd cycle blocks an independent K_2 transversal",
                             {"kind": "cycle", "cycle": cycle})
        coloring = nx.bipartite.color(g.nx_view)
        chosen = frozenset(v for v, side in coloring.items() if side == 1)
        return CriticalSetResult(chosen, tuple(sorted(chosen)), 1, False, g.size, False)


def critical_set(g: Graph, t: int, minor_cap: Optional[int] = None,
                 budget: Optional[int] = None) -> CriticalSetResult:
    """
    Independent F with G - F K_t-minor-free, built by the round procedure.

    Raises PreconditionNotMet when g has no K_t minor and
    ConstructionFailed with a certificate when the procedure gets stuck.
    """
    if find_clique_minor(g, t, budget) is None:
        raise PreconditionNotMet(f"graph has no K_{t} minor")
    return CriticalSetBuilder(g, t, minor_cap, budget).run()
