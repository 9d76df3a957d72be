"""
Instance supply for claim campaigns: exhaustive non-isomorphic graphs,
seeded random triangulations and G(n, p) graphs, and named graphs for the
command line.
"""
import logging
from typing import Callable, Dict, Iterator, List, Tuple

import networkx as nx
import numpy as np

from core.config import CampaignDefaults
from core.errors import DomainError
from core.graph import Graph

logger = logging.getLogger(__name__)

# networkx ships every graph up to this order
ATLAS_MAX_ORDER = 7


# ==================== EXHAUSTIVE ====================

def _extend_by_one_vertex(n: int) -> Iterator[Graph]:
    """
    Every graph on n vertices arises from one on n - 1 by adding a vertex;
    candidates are bucketed by degree sequence and WL hash, then rejected
    with an exact isomorphism test
    """
    buckets: Dict[Tuple, List[nx.Graph]] = {}
    new = n - 1
    for base in enumerate_graphs(n - 1):
        for mask in range(1 << new):
            h = base.to_networkx()
            h.add_node(new)
            h.add_edges_from((v, new) for v in range(new) if mask >> v & 1)
            key = (tuple(sorted(d for _, d in h.degree())), nx.weisfeiler_lehman_graph_hash(h))
            bucket = buckets.setdefault(key, [])
            if any(nx.is_isomorphic(h, other) for other in bucket):
                continue
            bucket.append(h)
            yield Graph.from_networkx(h)


def enumerate_graphs(n: int) -> Iterator[Graph]:
    """One graph per isomorphism class on n vertices, in a fixed order"""
    cap = CampaignDefaults.EXHAUSTIVE_MAX_ORDER
    if n < 0:
        raise DomainError(f"order must be non-negative, got {n}")
    if n > cap:
        raise DomainError(f"exhaustive enumeration is capped at {cap} vertices (got {n})")
    if n <= ATLAS_MAX_ORDER:
        return (Graph.from_networkx(h) for h in nx.graph_atlas_g() if h.number_of_nodes() == n)
    logger.info("building the %d-vertex graphs by one-vertex extension", n)
    return _extend_by_one_vertex(n)


# ==================== RANDOM FAMILIES ====================

def random_planar(n: int, seed=None) -> Graph:
    """
    Maximal planar graph on n vertices: start from a triangle and insert each
    new vertex into a uniformly chosen face, joining it to the face corners
    """
    if n < 3:
        raise DomainError(f"a triangulation needs at least 3 vertices, got {n}")
    rng = np.random.default_rng(seed)
    edges = [(0, 1), (1, 2), (0, 2)]
    faces = [(0, 1, 2), (0, 1, 2)]  # inner and outer face of the triangle
    for v in range(3, n):
        a, b, c = faces.pop(int(rng.integers(len(faces))))
        edges.extend([(a, v), (b, v), (c, v)])
        faces.extend([(a, b, v), (b, c, v), (a, c, v)])
    return Graph.from_edges(n, edges)


def random_gnp(n: int, p: float, seed=None) -> Graph:
    if not 0.0 <= p <= 1.0:
        raise DomainError(f"edge probability must lie in [0, 1], got {p}")
    return Graph.from_networkx(nx.gnp_random_graph(n, p, seed=seed))


# ==================== NAMED GRAPHS ====================

_SIZED: Dict[str, Callable[[int], nx.Graph]] = {
    "complete": nx.complete_graph,
    "cycle": nx.cycle_graph,
    "path": nx.path_graph,
    "empty": nx.empty_graph,
    "star": nx.star_graph,  # center 0 plus k leaves
    "wheel": lambda k: nx.wheel_graph(k + 1),  # hub 0 plus a k-cycle
}

_FIXED: Dict[str, Callable[[], nx.Graph]] = {
    "petersen": nx.petersen_graph,
    "octahedron": nx.octahedral_graph,
}


def _int_field(spec: str, raw: str) -> int:
    try:
        return int(raw)
    except ValueError:
        raise DomainError(f"generator '{spec}': expected an integer, got '{raw}'") from None


def generate(spec: str) -> Graph:
    """
    Build a graph from a generator spec such as wheel:5, complete:4,
    petersen, planar:10:1 or gnp:8:0.4:1
    """
    name, *args = spec.strip().lower().split(":")
    if name in _FIXED and not args:
        return Graph.from_networkx(_FIXED[name]())
    if name in _SIZED and len(args) == 1:
        size = _int_field(spec, args[0])
        if size < 0:
            raise DomainError(f"generator '{spec}': size must be non-negative")
        return Graph.from_networkx(_SIZED[name](size))
    if name == "planar" and len(args) in (1, 2):
        seed = _int_field(spec, args[1]) if len(args) == 2 else CampaignDefaults.DEFAULT_SEED
        return random_planar(_int_field(spec, args[0]), seed)
    if name == "gnp" and len(args) in (2, 3):
        try:
            p = float(args[1])
        except ValueError:
            raise DomainError(f"generator '{spec}': bad probability '{args[1]}'") from None
        seed = _int_field(spec, args[2]) if len(args) == 3 else CampaignDefaults.DEFAULT_SEED
        return random_gnp(_int_field(spec, args[0]), p, seed)
    known = sorted(_FIXED) + [f"{k}:<n>" for k in sorted(_SIZED)] + ["planar:<n>:<seed>", "gnp:<n>:<p>:<seed>"]
    raise DomainError(f"unknown generator '{spec}'; known: {', '.join(known)}")
