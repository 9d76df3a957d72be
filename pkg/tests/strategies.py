"""
Hypothesis strategies for small simple graphs
"""
import itertools

from hypothesis import strategies as st

from core.graph import Graph


@st.composite
def graphs(draw, min_order=0, max_order=6):
    """Any simple graph on min_order..max_order vertices, one coin per vertex pair"""
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    pairs = list(itertools.combinations(range(n), 2))
    keep = draw(st.lists(st.booleans(), min_size=len(pairs), max_size=len(pairs)))
    return Graph.from_edges(n, [p for p, k in zip(pairs, keep) if k])


@st.composite
def forests(draw, min_order=1, max_order=8):
    """Random forests: each vertex after the first attaches to an earlier one or stays a root"""
    n = draw(st.integers(min_value=min_order, max_value=max_order))
    edges = []
    for v in range(1, n):
        parent = draw(st.integers(min_value=-1, max_value=v - 1))
        if parent >= 0:
            edges.append((parent, v))
    return Graph.from_edges(n, edges)
