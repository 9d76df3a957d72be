"""
Claim registry
Each registered statement is an executable predicate over one graph. The
hypothesis is checked first and a failed hypothesis is INAPPLICABLE, never
REFUTED. t is the Hadwiger number of the instance throughout.

Existence statements (T6, T7, T9, FC4, T413) try the constructive procedure
first. When it breaks, an exhaustive existence check decides the verdict and
the construction certificate stays in the evidence.
"""
import itertools
import logging
from dataclasses import dataclass, field
from typing import Any, Callable, Dict, Iterator, List, NamedTuple, Optional, Sequence

import networkx as nx

from coloring.chromatic import chromatic_number
from coloring.coloring import Coloring, coloring_violation
from coloring.schemes import is_planar, planar_fc4_coloring, srp_inductive_coloring
from core.config import ColoringConfig, SearchConfig
from core.errors import (
    ConstructionFailed, DomainError, OracleCapError, PreconditionNotMet, SearchBudgetExhausted,
)
from core.formats import parse_graph6, to_graph6
from core.graph import (
    Graph, VertexSet, delete_edges, delete_vertices, edges_within, find_cycle, is_connected,
    is_forest,
)
from core.results import Verdict
from minors.minimal import MinorEnumeration, break_minors_by_intersection, enumerate_minimal_minors
from minors.search import find_clique_minor, hadwiger_number
from partition.builders import build_erp, build_rp, build_srp
from partition.critical_set import critical_set
from partition.domination import (
    addable_vertices, is_maximal_forest, iter_maximal_dominating_trees, maximal_dominating_forest,
    two_neighbor_check, undominated_vertex,
)
from partition.validation import PartitionKind, PartitionResult, validated
from utils.serialization import ReportSerializer

logger = logging.getLogger(__name__)

CLAIM_IDS = ("T1", "L1", "T2", "T3", "T4", "T5", "L2", "C2", "L3", "L4", "C3",
             "T6", "T7", "T8", "T9", "FC4", "T413")


# ==================== REPORT TYPES ====================

@dataclass(frozen=True)
class ClaimReport:
    claim_id: str
    instance: str
    verdict: Verdict
    t: Optional[int] = None
    evidence: Dict[str, Any] = field(default_factory=dict)
    note: str = ""

    def sort_key(self):
        return CLAIM_IDS.index(self.claim_id), self.instance

    def to_dict(self) -> Dict:
        return {
            "claim": self.claim_id,
            "instance": self.instance,
            "verdict": self.verdict.value,
            "t": self.t,
            "evidence": self.evidence,
            "note": self.note,
        }

    @classmethod
    def from_dict(cls, payload: Dict) -> "ClaimReport":
        return cls(payload["claim"], payload["instance"], Verdict(payload["verdict"]),
                   payload.get("t"), dict(payload.get("evidence") or {}), payload.get("note", ""))


class Outcome(NamedTuple):
    verdict: Verdict
    evidence: Dict[str, Any] = {}
    note: str = ""


def _verified(note: str = "", evidence: Optional[Dict] = None) -> Outcome:
    return Outcome(Verdict.VERIFIED, evidence or {}, note)


def _refuted(evidence: Dict, note: str = "") -> Outcome:
    return Outcome(Verdict.REFUTED, evidence, note)


def _inapplicable(note: str, evidence: Optional[Dict] = None) -> Outcome:
    return Outcome(Verdict.INAPPLICABLE, evidence or {}, note)


class ClaimContext:
    """Per-instance facts shared by the claim checks, computed on demand"""

    def __init__(self, g: Graph, budget: Optional[int] = None, minor_cap: Optional[int] = None):
        self.graph = g
        self.budget = SearchConfig.resolve_budget(budget)
        self.minor_cap = minor_cap
        self.t, self.witness = hadwiger_number(g, self.budget)
        self._minors: Optional[MinorEnumeration] = None

    @property
    def all_vertices(self) -> VertexSet:
        return frozenset(self.graph.vertices)

    def minimal_minors(self) -> MinorEnumeration:
        if self._minors is None:
            self._minors = enumerate_minimal_minors(self.graph, self.t, SearchConfig.CLAIM_MINOR_CAP, self.budget)
        return self._minors

    def minor_sets(self) -> List[VertexSet]:
        """Distinct minimal-minor vertex sets in enumeration order"""
        sets: List[VertexSet] = []
        for m in self.minimal_minors():
            if m.vertices not in sets:
                sets.append(m.vertices)
        return sets

    def subsets_guard(self) -> None:
        cap = SearchConfig.SUBSET_ENUMERATION_MAX_ORDER
        if self.graph.order > cap:
            raise SearchBudgetExhausted(1 << self.graph.order)


def _minors_gate(ctx: ClaimContext) -> Optional[Outcome]:
    """Outcome to return early when the complete minimal minor family is unavailable"""
    if ctx.t < 2:
        return _inapplicable(f"no K_2 minor; minimal minors need t >= 2 (t = {ctx.t})")
    enumeration = ctx.minimal_minors()
    if enumeration.truncated:
        return Outcome(Verdict.BUDGET, {}, "minimal minor enumeration truncated")
    return None


# ==================== TRANSVERSALS ====================

class TransversalSearch:
    """
    Picks one vertex from each set so the picks induce a forest, or an
    independent set. A vertex already picked serves every set containing it.
    """

    def __init__(self, g: Graph, independent: bool = False, budget: Optional[int] = None):
        self.graph = g
        self.independent = independent
        self.budget = SearchConfig.resolve_budget(budget)
        self.nodes = 0

    def _fits(self, chosen: List[int], v: int) -> bool:
        if self.independent:
            return not self.graph.adjacency[v] & set(chosen)
        return is_forest(self.graph, chosen + [v])

    def _extend(self, sets: Sequence[VertexSet], i: int, chosen: List[int]) -> Optional[List[int]]:
        self.nodes += 1
        if self.nodes > self.budget:
            raise SearchBudgetExhausted(self.budget)
        if i == len(sets):
            return sorted(chosen)
        if sets[i] & set(chosen):
            return self._extend(sets, i + 1, chosen)
        for v in sorted(sets[i]):
            if self._fits(chosen, v):
                found = self._extend(sets, i + 1, chosen + [v])
                if found is not None:
                    return found
        return None

    def find(self, sets: Sequence[VertexSet]) -> Optional[List[int]]:
        return self._extend(sorted(sets, key=lambda s: (len(s), sorted(s))), 0, [])


def _transversal_claim(k: int) -> Callable[[ClaimContext], Outcome]:
    def check(ctx: ClaimContext) -> Outcome:
        gate = _minors_gate(ctx)
        if gate:
            return gate
        count = len(ctx.minimal_minors())
        if count < k:
            return _inapplicable(f"{count} minimal K_{ctx.t} minors, need at least {k}")
        sets = ctx.minor_sets()
        search = TransversalSearch(ctx.graph, budget=ctx.budget)
        if search.find(sets) is not None:
            return _verified(f"one forest selection covers all {len(sets)} minor vertex sets")
        size = min(k, len(sets))
        for examined, family in enumerate(itertools.combinations(sets, size)):
            if examined >= SearchConfig.TRANSVERSAL_SUBSET_CAP:
                raise SearchBudgetExhausted(SearchConfig.TRANSVERSAL_SUBSET_CAP)
            if search.find(family) is None:
                return _refuted({"kind": "minors", "minors": ReportSerializer.vertex_sets(family)},
                                f"no selection from these {size} minors induces a forest")
        return _verified(f"every {size}-subset of minor vertex sets has a forest selection")

    return check


# ==================== DOMINATING FORESTS ====================

def _check_t1(ctx: ClaimContext) -> Outcome:
    g = ctx.graph
    try:
        forest = maximal_dominating_forest(g)
    except ConstructionFailed as exc:
        return _refuted(_construction_evidence(exc, kind="vertex"), str(exc))
    evidence = {"forest": sorted(forest)}
    cycle = find_cycle(g, forest)
    if cycle is not None:
        return _refuted(dict(evidence, kind="cycle", cycle=cycle))
    v = undominated_vertex(g, forest)
    if v is not None:
        return _refuted(dict(evidence, kind="vertex", vertex=v), f"vertex {v} is not dominated")
    extra = next(addable_vertices(g, forest), None)
    if extra is not None:
        return _refuted(dict(evidence, kind="vertex", vertex=extra), f"forest extends by {extra}")
    return _verified()


def _dominating_trees(ctx: ClaimContext) -> Iterator[VertexSet]:
    ctx.subsets_guard()
    return iter_maximal_dominating_trees(ctx.graph)


def _check_l1(ctx: ClaimContext) -> Outcome:
    count = 0
    for s in _dominating_trees(ctx):
        count += 1
        check = two_neighbor_check(ctx.graph, s)
        if check.verdict is Verdict.REFUTED:
            return _refuted({"kind": "vertex", "tree": sorted(s), "vertex": check.vertex}, check.note)
    if not count:
        return _inapplicable("no maximal dominating tree")
    return _verified(f"{count} maximal dominating trees")


def _check_t2(ctx: ClaimContext) -> Outcome:
    g = ctx.graph
    count = 0
    for s in _dominating_trees(ctx):
        count += 1
        result = validated(g, PartitionResult(PartitionKind.RP, (s, ctx.all_vertices - s), ctx.t), ctx.budget)
        if not result.valid:
            return _refuted({"kind": "partition", "partition": result.to_dict()},
                            f"maximal dominating tree {sorted(s)} does not give an RP")
    if not count:
        return _inapplicable("no maximal dominating tree")
    return _verified(f"{count} maximal dominating trees")


# ==================== EDGE DELETION ====================

def _edge_deletions(ctx: ClaimContext, edges) -> Optional[Outcome]:
    for u, v in sorted(edges):
        witness = find_clique_minor(delete_edges(ctx.graph, [(u, v)]), ctx.t, ctx.budget)
        if witness is not None:
            return _refuted({"kind": "witness", "edge": [u, v], "witness": witness.to_dict()},
                            f"a K_{ctx.t} minor survives deleting ({u}, {v})")
    return None


def _check_t3(ctx: ClaimContext) -> Outcome:
    gate = _minors_gate(ctx)
    if gate:
        return gate
    minors = ctx.minimal_minors().minors
    if len(minors) != 1:
        return _inapplicable(f"{len(minors)} minimal K_{ctx.t} minors, need exactly one")
    return _edge_deletions(ctx, minors[0].support_edges) or _verified(
        f"{len(minors[0].support_edges)} support edges checked")


def _check_t4(ctx: ClaimContext) -> Outcome:
    gate = _minors_gate(ctx)
    if gate:
        return gate
    common = frozenset.intersection(*ctx.minor_sets())
    if not common:
        return _inapplicable("minimal minors have no common vertex")
    inside = edges_within(ctx.graph, common)
    if not inside:
        return _inapplicable(f"common vertex set {sorted(common)} spans no edge")
    return _edge_deletions(ctx, inside) or _verified(f"{len(inside)} edges in the common vertex set checked")


def _check_t5(ctx: ClaimContext) -> Outcome:
    if ctx.t < 2:
        return _inapplicable(f"no K_2 minor; minimal minors need t >= 2 (t = {ctx.t})")
    result = break_minors_by_intersection(ctx.graph, ctx.t, SearchConfig.CLAIM_MINOR_CAP, ctx.budget)
    if result.verdict is Verdict.REFUTED:
        return _refuted(dict(result.to_dict(), kind="intersection-break"), "a K_t minor survives the deletions")
    return Outcome(result.verdict, {}, result.note)


# ==================== MINOR NEIGHBORHOODS ====================

def _check_l3(ctx: ClaimContext) -> Outcome:
    gate = _minors_gate(ctx)
    if gate:
        return gate
    g = ctx.graph
    applicable = 0
    for vi in ctx.minor_sets():
        if not all(g.adjacency[v] - vi for v in vi):
            continue
        applicable += 1
        rest = ctx.all_vertices - vi
        if is_connected(g, rest):
            return _refuted({"kind": "minor", "minor": sorted(vi)},
                            "every minor vertex has an outside neighbor yet the rest is connected")
    if not applicable:
        return _inapplicable("no minor has an outside neighbor at every vertex")
    return _verified(f"{applicable} minors checked")


def _check_l4(ctx: ClaimContext) -> Outcome:
    gate = _minors_gate(ctx)
    if gate:
        return gate
    g = ctx.graph
    if not is_connected(g):
        return _inapplicable("graph is disconnected")
    applicable = 0
    for vj in ctx.minor_sets():
        rest = ctx.all_vertices - vj
        if not rest or not is_connected(g, rest):
            continue
        applicable += 1
        if all(g.adjacency[v] - vj for v in vj):
            return _refuted({"kind": "minor", "minor": sorted(vj)},
                            "the rest is connected yet every minor vertex has an outside neighbor")
    if not applicable:
        return _inapplicable("no minor leaves a connected nonempty remainder")
    return _verified(f"{applicable} minors checked")


# ==================== CRITICAL SETS AND PARTITIONS ====================

def _construction_evidence(exc: ConstructionFailed, **extra) -> Dict:
    return dict(extra, construction=exc.certificate.to_dict())


def _check_t6(ctx: ClaimContext) -> Outcome:
    g, t = ctx.graph, ctx.t
    try:
        found = critical_set(g, t, ctx.minor_cap, ctx.budget)
    except ConstructionFailed as exc:
        gate = _minors_gate(ctx)
        if gate:
            return gate
        picks = TransversalSearch(g, independent=True, budget=ctx.budget).find(ctx.minor_sets())
        note = f"procedure failed at stage '{exc.certificate.stage}'"
        if picks is None:
            return _refuted(_construction_evidence(exc, kind="exhaustive"),
                            f"{note}; no independent set meets every minimal minor")
        return _verified(f"{note}; an independent critical set exists",
                         _construction_evidence(exc, kind="critical-set", critical_set=picks))

    size, m = len(found.vertices), found.initial_minors
    if found.heuristic:
        return _verified(f"heuristic mode, |F| = {size}")
    if size > m or (found.pairwise_disjoint and size != m):
        return _refuted({"kind": "count", "critical_set": sorted(found.vertices), "minors": m},
                        f"|F| = {size} against {m} minimal minors")
    return _verified(f"|F| = {size} for {m} minimal minors")


def _minor_free_rest(ctx: ClaimContext, s1: VertexSet) -> bool:
    return find_clique_minor(delete_vertices(ctx.graph, s1).graph, ctx.t, ctx.budget) is None


def _iter_maximal_forests(ctx: ClaimContext) -> Iterator[VertexSet]:
    ctx.subsets_guard()
    g = ctx.graph
    for mask in range(1, 1 << g.order):
        s = frozenset(v for v in g.vertices if mask >> v & 1)
        if is_maximal_forest(g, s):
            yield s


def _iter_maximal_independent_sets(ctx: ClaimContext) -> Iterator[VertexSet]:
    complement = nx.complement(ctx.graph.nx_view)
    return iter(sorted((frozenset(c) for c in nx.find_cliques(complement)), key=sorted))


def _exhaustive_partition(ctx: ClaimContext, exc: ConstructionFailed, candidates: Iterator[VertexSet],
                          kind: PartitionKind) -> Outcome:
    """
    Any valid S_1 can be enlarged to a maximal one of the same shape without
    breaking the partition, so only maximal candidates are tried
    """
    note = f"{kind.value} construction failed at stage '{exc.certificate.stage}'"
    for s1 in candidates:
        if _minor_free_rest(ctx, s1):
            parts = [sorted(s1), sorted(ctx.all_vertices - s1)]
            return _verified(f"{note}; exhaustive search found one",
                             _construction_evidence(exc, kind="partition", parts=parts))
    return _refuted(_construction_evidence(exc, kind="exhaustive"), f"{note}; none exists")


def _check_t7(ctx: ClaimContext) -> Outcome:
    if not is_connected(ctx.graph):
        return _inapplicable("graph is disconnected")
    try:
        result = build_rp(ctx.graph, ctx.t, ctx.minor_cap, ctx.budget)
    except ConstructionFailed as exc:
        return _exhaustive_partition(ctx, exc, _iter_maximal_forests(ctx), PartitionKind.RP)
    return _verified(f"|S_1| = {len(result.parts[0])}")


def _check_t8(ctx: ClaimContext) -> Outcome:
    try:
        result = build_erp(ctx.graph, ctx.minor_cap, ctx.budget)
    except ConstructionFailed as exc:
        if exc.certificate.stage == "depth-bound":
            return _refuted(_construction_evidence(exc, kind="depth"), str(exc))
        return _inapplicable(f"ERP construction failed at stage '{exc.certificate.stage}'",
                             _construction_evidence(exc, kind="construction"))
    return _verified(f"depth {result.depth}")


def _check_t9(ctx: ClaimContext) -> Outcome:
    try:
        result = build_srp(ctx.graph, ctx.t, ctx.minor_cap, ctx.budget)
    except ConstructionFailed as exc:
        return _exhaustive_partition(ctx, exc, _iter_maximal_independent_sets(ctx), PartitionKind.SRP)
    return _verified(f"|S_1| = {len(result.parts[0])}")


# ==================== COLORINGS ====================

def _scheme_outcome(ctx: ClaimContext, scheme: Callable[[], Coloring], bound: int, label: str) -> Outcome:
    """Scheme first; a scheme failure is settled by the exact oracle"""
    g = ctx.graph
    try:
        colors = scheme()
    except ConstructionFailed as exc:
        k, optimal = chromatic_number(g, ctx.budget)
        note = f"{label} scheme failed at stage '{exc.certificate.stage}'"
        if k > bound:
            return _refuted(_construction_evidence(exc, kind="chromatic", chromatic_number=k, bound=bound),
                            f"{note}; chromatic number {k} exceeds {bound}")
        return _verified(f"{note}; oracle colors with {k}",
                         _construction_evidence(exc, kind="oracle", chromatic_number=k,
                                                coloring=optimal.to_dict()))
    problem = coloring_violation(g, colors)
    if problem is None and colors.num_colors > bound:
        problem = f"{colors.num_colors} colors exceed {bound}"
    if problem is not None:
        return _refuted({"kind": "coloring", "coloring": colors.to_dict()}, problem)
    return _verified(f"{label} scheme used {colors.num_colors} colors")


def _check_fc4(ctx: ClaimContext) -> Outcome:
    if not is_planar(ctx.graph):
        return _inapplicable("graph is not planar")
    return _scheme_outcome(ctx, lambda: planar_fc4_coloring(ctx.graph, ctx.minor_cap, ctx.budget),
                           ColoringConfig.PLANAR_COLORS, "planar")


def _check_t413(ctx: ClaimContext) -> Outcome:
    return _scheme_outcome(ctx, lambda: srp_inductive_coloring(ctx.graph, ctx.minor_cap, ctx.budget),
                           ctx.t, "SRP")


# ==================== REGISTRY ====================

class Claim(NamedTuple):
    claim_id: str
    statement: str
    check: Callable[[ClaimContext], Outcome]


CLAIMS: Dict[str, Claim] = {claim.claim_id: claim for claim in (
    Claim("T1", "every graph has a dominating induced forest", _check_t1),
    Claim("L1", "outside a maximal dominating tree every vertex has two neighbors in it", _check_l1),
    Claim("T2", "a maximal dominating tree and its complement form an RP", _check_t2),
    Claim("T3", "with a unique minimal K_t minor, deleting any of its edges leaves no K_t minor", _check_t3),
    Claim("T4", "deleting an edge inside the common vertex set of all minimal K_t minors leaves no K_t minor",
          _check_t4),
    Claim("T5", "one edge deleted per pairwise intersection set leaves no K_t minor", _check_t5),
    Claim("L2", "three minimal K_t minors admit a forest selection", _transversal_claim(3)),
    Claim("C2", "four minimal K_t minors admit a forest selection", _transversal_claim(4)),
    Claim("L3", "a minor whose every vertex has an outside neighbor disconnects the rest", _check_l3),
    Claim("L4", "a minor with a connected remainder has a vertex with no outside neighbor", _check_l4),
    Claim("C3", "five minimal K_t minors admit a forest selection", _transversal_claim(5)),
    Claim("T6", "an independent critical set exists, one vertex per minor when minors are disjoint", _check_t6),
    Claim("T7", "every connected graph has an RP", _check_t7),
    Claim("T8", "the ERP depth is at most t - 1", _check_t8),
    Claim("T9", "every graph has an SRP", _check_t9),
    Claim("FC4", "every planar graph is 4-colorable", _check_fc4),
    Claim("T413", "a graph without a K_{t+1} minor is t-colorable", _check_t413),
)}


def check_claim(claim_id: str, g: Graph, budget: Optional[int] = None,
                minor_cap: Optional[int] = None) -> ClaimReport:
    """Evaluate one registered claim on g; budget and oracle caps become BUDGET"""
    if claim_id not in CLAIMS:
        raise DomainError(f"unknown claim '{claim_id}'; known: {', '.join(CLAIM_IDS)}")
    instance = to_graph6(g)
    if g.order == 0:
        return ClaimReport(claim_id, instance, Verdict.INAPPLICABLE, None, {}, "graph has no vertices")
    try:
        ctx = ClaimContext(g, budget, minor_cap)
    except SearchBudgetExhausted as exc:
        return ClaimReport(claim_id, instance, Verdict.BUDGET, exc.lower_bound, {}, str(exc))

    try:
        outcome = CLAIMS[claim_id].check(ctx)
    except (SearchBudgetExhausted, OracleCapError) as exc:
        outcome = Outcome(Verdict.BUDGET, {}, str(exc))
    except PreconditionNotMet as exc:
        outcome = _inapplicable(str(exc))
    logger.debug("%s on %s (t=%d): %s %s", claim_id, instance, ctx.t, outcome.verdict.value, outcome.note)
    return ClaimReport(claim_id, instance, outcome.verdict, ctx.t, dict(outcome.evidence), outcome.note)


def replay_report(report: ClaimReport, budget: Optional[int] = None, minor_cap: Optional[int] = None) -> bool:
    """Re-run the producing check on the archived instance and compare verdict and evidence"""
    again = check_claim(report.claim_id, parse_graph6(report.instance), budget, minor_cap)
    same = ReportSerializer.dumps(again.evidence) == ReportSerializer.dumps(report.evidence)
    return again.verdict is report.verdict and same
