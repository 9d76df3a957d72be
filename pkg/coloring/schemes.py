"""
Partition-guided coloring schemes.

srp_inductive_coloring colors G[S_2] of an SRP recursively and gives each
S_1 vertex the least color missing from its neighborhood; success requires
no more colors than the Hadwiger number at every level.

planar_fc4_coloring takes an ERP of a planar graph, looks for a 3-coloring
of V - S_1 under which every adjacent S_1 pair sees at most two colors on
its common neighborhood, then first-fits S_1. Any step that breaks ends in
a certificate.
"""
import itertools
import logging
from typing import Dict, List, Optional

import networkx as nx

from coloring.chromatic import chromatic_number, iter_colorings
from coloring.coloring import Coloring, first_fit
from core.config import ColoringConfig
from core.errors import ConstructionFailed, PreconditionNotMet
from core.graph import (
    Graph, VertexSet, common_neighbors_in, edges_within, find_odd_cycle, induced_subgraph, is_forest,
)
from core.results import FailureCertificate
from minors.search import hadwiger_number
from partition.builders import build_erp, build_srp

logger = logging.getLogger(__name__)


# ==================== SRP INDUCTIVE SCHEME ====================

def _forest_coloring(g: Graph) -> Dict[int, int]:
    if g.size == 0:
        return {v: 0 for v in g.vertices}
    sides = nx.bipartite.color(g.nx_view)
    return {v: sides[v] for v in g.vertices}


def _srp_colors(g: Graph, minor_cap: Optional[int], budget: Optional[int], depth: int) -> Dict[int, int]:
    if g.order == 0:
        return {}
    if is_forest(g):
        return _forest_coloring(g)

    n, _ = hadwiger_number(g, budget)
    srp = build_srp(g, n, minor_cap, budget)
    s1, s2 = srp.parts
    sub = induced_subgraph(g, s2)
    inner = _srp_colors(sub.graph, minor_cap, budget, depth + 1)
    back = sub.inverse()
    colors = {back[v]: c for v, c in inner.items()}
    colors = first_fit(g, sorted(s1), colors)
    logger.debug("SRP level %d: n=%d, |S_1|=%d, colors=%d", depth, n, len(s1), len(set(colors.values())))

    for v in sorted(s1):
        if colors[v] >= n:
            neighborhood = {str(u): colors[u] for u in sorted(g.adjacency[v])}
            raise ConstructionFailed(FailureCertificate(
                "hadwiger-bound",
                f"vertex {v} needs color {colors[v] + 1} but the Hadwiger number is {n}",
                g,
                {"kind": "rainbow", "vertex": v, "neighborhood": neighborhood, "level": depth},
            ))
    return colors


def srp_inductive_coloring(g: Graph, minor_cap: Optional[int] = None, budget: Optional[int] = None) -> Coloring:
    return Coloring.from_assignment(_srp_colors(g, minor_cap, budget, 0))


# ==================== PLANAR SCHEME ====================

def is_planar(g: Graph) -> bool:
    """Euler bound as a fast reject, then an embedding test"""
    if g.order >= 3 and g.size > 3 * g.order - 6:
        return False
    planar, _ = nx.check_planarity(g.nx_view)
    return planar


def connecting_paths(g: Graph, common: VertexSet, allowed: VertexSet,
                     max_length: int = ColoringConfig.MAX_CONNECTING_PATH_LENGTH) -> List[List[int]]:
    """
    Shortest paths u_1 w_1 ... w_m u_2 between non-adjacent members of common
    whose inner vertices lie in allowed but outside common, up to max_length edges
    """
    inner = allowed - common
    paths = []
    for u1, u2 in itertools.combinations(sorted(common), 2):
        if g.has_edge(u1, u2):
            continue
        view = g.nx_view.subgraph(inner | {u1, u2})
        try:
            found = sorted(nx.all_shortest_paths(view, u1, u2))
        except nx.NetworkXNoPath:
            continue
        paths.extend(p for p in found if len(p) - 1 <= max_length)
    return paths


def _pair_constraints(g: Graph, s1: VertexSet, rest: VertexSet):
    return [(u, v, common_neighbors_in(g, u, v, rest)) for u, v in edges_within(g, s1)]


def planar_fc4_coloring(g: Graph, minor_cap: Optional[int] = None, budget: Optional[int] = None) -> Coloring:
    if not is_planar(g):
        raise PreconditionNotMet("graph is not planar")
    if g.order == 0:
        return Coloring({}, 0)

    erp = build_erp(g, minor_cap, budget)
    s1 = erp.parts[0]
    rest = frozenset(g.vertices) - s1
    sub = induced_subgraph(g, rest)
    back = sub.inverse()

    k, _ = chromatic_number(sub.graph, budget)
    if k > 3:
        raise ConstructionFailed(FailureCertificate(
            "remainder-3-coloring", f"G - S_1 needs {k} colors", g,
            {"kind": "chromatic", "vertices": sorted(rest), "chromatic_number": k},
        ))

    pairs = _pair_constraints(g, s1, rest)
    for u, v, common in pairs:
        cycle = find_odd_cycle(g, common)
        if cycle is not None:
            raise ConstructionFailed(FailureCertificate(
                "common-neighborhood",
                f"common neighborhood of adjacent S_1 vertices {u}, {v} is not 2-colorable",
                g,
                {"kind": "odd-cycle", "pair": [u, v], "common": sorted(common), "cycle": cycle,
                 "paths": connecting_paths(g, common, rest)},
            ))

    theta = None
    for candidate in iter_colorings(sub.graph, 3, budget):
        lifted = {back[w]: c for w, c in candidate.items()}
        if all(len({lifted[w] for w in common}) <= 2 for _, _, common in pairs):
            theta = lifted
            break
    if theta is None:
        u, v, common = max(pairs, key=lambda p: len(p[2]))
        raise ConstructionFailed(FailureCertificate(
            "theta",
            "no 3-coloring of G - S_1 keeps every adjacent S_1 pair's common neighborhood within 2 colors",
            g,
            {"kind": "pairs", "pairs": [[a, b, sorted(c)] for a, b, c in pairs],
             "paths": connecting_paths(g, common, rest)},
        ))

    colors = first_fit(g, sorted(s1), theta)
    used = len(set(colors.values()))
    if used > ColoringConfig.PLANAR_COLORS:
        v = next(w for w in sorted(s1) if colors[w] >= ColoringConfig.PLANAR_COLORS)
        raise ConstructionFailed(FailureCertificate(
            "four-colors",
            f"first-fit on S_1 needs {used} colors",
            g,
            {"kind": "rainbow", "vertex": v,
             "neighborhood": {str(w): colors[w] for w in sorted(g.adjacency[v])}},
        ))
    logger.info("planar scheme colored %r with %d colors (ERP depth %d)", g, used, erp.depth)
    return Coloring.from_assignment(colors)
