"""
Shared graph fixtures
"""
import itertools

import networkx as nx
import pytest

from core.graph import Graph
from verify.generators import generate


def complete(n):
    return Graph.from_edges(n, itertools.combinations(range(n), 2))


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path(n):
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def two_k4_blocks(bridge):
    """K_4 on 0..3 and K_4 on 4..7 joined by the given connecting edges"""
    edges = list(itertools.combinations(range(4), 2)) + list(itertools.combinations(range(4, 8), 2))
    return Graph.from_edges(8, edges + list(bridge))


@pytest.fixture
def k4():
    return complete(4)


@pytest.fixture
def c5():
    return cycle(5)


@pytest.fixture
def wheel5():
    """Hub 0 joined to the 5-cycle 1..5"""
    return generate("wheel:5")


@pytest.fixture
def petersen():
    return Graph.from_networkx(nx.petersen_graph())


@pytest.fixture
def octahedron():
    return Graph.from_networkx(nx.octahedral_graph())


@pytest.fixture
def two_triangles():
    return Graph.from_edges(6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5)])


@pytest.fixture
def k4_with_pendant():
    return Graph.from_edges(5, list(itertools.combinations(range(4), 2)) + [(0, 4)])


@pytest.fixture
def k4_with_split_forest():
    """
    K_4 on 0..3 dominated by the two single-vertex trees {4} and {5}:
    4 sees 0 and 1, 5 sees 2 and 3. The complement of the forest still
    holds a K_4, so the pair is no reducible partition.
    """
    edges = list(itertools.combinations(range(4), 2)) + [(4, 0), (4, 1), (5, 2), (5, 3)]
    return Graph.from_edges(6, edges)


@pytest.fixture
def cube_with_hubs():
    """
    The cube as a 6-cycle 0..5 with hub 6 on the even positions and hub 7
    on the odd ones. It has K_4 minors and deleting both hubs leaves it
    K_4-free, so {6, 7} is a critical set.
    """
    ring = [(i, (i + 1) % 6) for i in range(6)]
    return Graph.from_edges(8, ring + [(6, 0), (6, 2), (6, 4), (7, 1), (7, 3), (7, 5)])
