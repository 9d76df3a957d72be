"""Tests for clique-minor search, Hadwiger numbers and minimal minors."""
import functools
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from core.errors import DomainError, SearchBudgetExhausted
from core.formats import to_graph6
from core.graph import Graph, contract_edge, delete_edges, delete_vertices, is_forest
from minors.minimal import (
    break_minors_by_intersection, distinct_intersections, enumerate_minimal_minors, pairwise_intersections,
)
from minors.search import find_clique_minor, hadwiger_number
from minors.witness import MinimalMinor, MinorWitness, verify_witness, witness_violation
from verify.generators import enumerate_graphs, random_planar
from tests.conftest import complete, cycle, path, two_k4_blocks
from tests.strategies import forests, graphs


def brute_force_has_minor(g: Graph, t: int) -> bool:
    """Label every vertex with a branch set 1..t or 0 (unused) and test the labelling directly"""
    if t > g.order:
        return False
    view = g.nx_view
    for labels in itertools.product(range(t + 1), repeat=g.order):
        sets = [{v for v in g.vertices if labels[v] == i} for i in range(1, t + 1)]
        if not all(sets):
            continue
        if not all(nx.is_connected(view.subgraph(s)) for s in sets):
            continue
        if all(any(view.has_edge(u, w) for u in a for w in b) for a, b in itertools.combinations(sets, 2)):
            return True
    return False


@functools.lru_cache(maxsize=None)
def contraction_hadwiger(g: Graph) -> int:
    """Largest clique over every graph reachable from g by edge contractions"""
    best, seen, stack = 0, set(), [g]
    while stack:
        h = stack.pop()
        if h in seen:
            continue
        seen.add(h)
        best = max(best, max(len(c) for c in nx.find_cliques(h.nx_view)))
        stack.extend(contract_edge(h, e).graph for e in h.edges)
    return best


def minor(sets, edges):
    return MinimalMinor(MinorWitness.from_sets(sets), frozenset(edges))


# ==================== Clique minor search ====================

class TestFindCliqueMinor:
    def test_complete_graph_is_its_own_witness(self):
        w = find_clique_minor(complete(5), 5)
        assert w.t == 5
        assert all(len(s) == 1 for s in w.branch_sets)

    def test_tree_has_no_triangle_minor(self):
        assert find_clique_minor(path(7), 3) is None

    def test_petersen(self, petersen):
        w = find_clique_minor(petersen, 5)
        assert w is not None and verify_witness(petersen, w)
        assert find_clique_minor(petersen, 6) is None

    def test_t_below_one_rejected(self):
        with pytest.raises(DomainError):
            find_clique_minor(complete(3), 0)

    def test_budget_exhaustion_is_not_absence(self, petersen):
        with pytest.raises(SearchBudgetExhausted):
            find_clique_minor(petersen, 5, budget=1)

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_order=1, max_order=5), st.integers(min_value=2, max_value=4))
    def test_agrees_with_brute_force(self, g, t):
        w = find_clique_minor(g, t)
        assert (w is not None) == brute_force_has_minor(g, t)
        if w is not None:
            assert verify_witness(g, w)

    def test_contraction_oracle_on_small_graphs(self, wheel5):
        assert contraction_hadwiger(complete(5)) == 5
        assert contraction_hadwiger(cycle(6)) == 3
        assert contraction_hadwiger(wheel5) == 4

    @pytest.mark.slow
    @pytest.mark.parametrize("t", range(3, 8))
    def test_agrees_with_contraction_oracle_on_all_seven_vertex_graphs(self, t):
        for g in enumerate_graphs(7):
            w = find_clique_minor(g, t)
            assert (w is not None) == (contraction_hadwiger(g) >= t), to_graph6(g)
            if w is not None:
                assert verify_witness(g, w)


# ==================== Hadwiger number ====================

class TestHadwigerNumber:
    @pytest.mark.parametrize("t", range(1, 7))
    def test_complete_graphs(self, t):
        assert hadwiger_number(complete(t))[0] == t

    def test_petersen(self, petersen):
        h, w = hadwiger_number(petersen)
        assert h == 5 and verify_witness(petersen, w)

    def test_edgeless(self):
        assert hadwiger_number(Graph.empty(3))[0] == 1

    def test_empty_graph_rejected(self):
        with pytest.raises(DomainError):
            hadwiger_number(Graph.empty(0))

    @settings(max_examples=40)
    @given(forests(min_order=2))
    def test_forests_with_an_edge(self, g):
        if g.size:
            assert hadwiger_number(g)[0] == 2

    @settings(max_examples=60, deadline=None)
    @given(graphs(min_order=1, max_order=7))
    def test_at_least_the_clique_number(self, g):
        clique = max(len(c) for c in nx.find_cliques(g.nx_view))
        assert hadwiger_number(g)[0] >= clique

    @settings(max_examples=40, deadline=None)
    @given(graphs(min_order=2, max_order=7), st.data())
    def test_deletion_never_increases(self, g, data):
        h = hadwiger_number(g)[0]
        v = data.draw(st.integers(min_value=0, max_value=g.order - 1))
        assert hadwiger_number(delete_vertices(g, {v}).graph)[0] <= h
        if g.size:
            e = data.draw(st.sampled_from(g.edges))
            assert hadwiger_number(delete_edges(g, [e]))[0] <= h

    @pytest.mark.parametrize("n, seed", [(5, 0), (6, 1), (7, 2), (8, 3)])
    def test_triangulations(self, n, seed):
        assert hadwiger_number(random_planar(n, seed))[0] == 4

    def test_budget_keeps_lower_bound(self, petersen):
        with pytest.raises(SearchBudgetExhausted) as err:
            hadwiger_number(petersen, budget=1)
        assert err.value.lower_bound == 2
        assert verify_witness(petersen, err.value.witness)


# ==================== Witnesses ====================

class TestWitness:
    def test_k4_singletons(self, k4):
        assert verify_witness(k4, MinorWitness.from_sets([[0], [1], [2], [3]]))

    def test_overlapping_sets(self, k4):
        w = MinorWitness(2, (frozenset({0, 1}), frozenset({1, 2})))
        assert "overlaps" in witness_violation(k4, w)

    def test_disconnected_set(self):
        w = MinorWitness.from_sets([[0, 3], [1], [2]])
        assert "not connected" in witness_violation(cycle(6), w)

    def test_non_adjacent_sets(self):
        assert not verify_witness(path(4), MinorWitness.from_sets([[0], [3]]))


# ==================== Minimal minors ====================

class TestMinimalMinors:
    def test_k4_has_one(self, k4):
        found = enumerate_minimal_minors(k4, 4)
        assert len(found) == 1 and found.exhaustive
        assert found.minors[0].support_edges == frozenset(k4.edges)
        assert found.minors[0].vertex_minimal

    def test_c5_cycle_is_the_only_triangle_support(self, c5):
        found = enumerate_minimal_minors(c5, 3)
        assert len(found) == 1
        assert found.minors[0].support_edges == frozenset(c5.edges)

    def test_tree_has_none(self):
        assert len(enumerate_minimal_minors(path(5), 3)) == 0

    def test_t_below_two_rejected(self, k4):
        with pytest.raises(DomainError):
            enumerate_minimal_minors(k4, 1)

    def test_limit_truncates(self, petersen):
        found = enumerate_minimal_minors(petersen, 3, limit=2)
        assert len(found) == 2 and found.truncated

    @settings(max_examples=25, deadline=None)
    @given(graphs(min_order=3, max_order=5))
    def test_supports_are_edge_minimal(self, g):
        for m in enumerate_minimal_minors(g, 3):
            for e in m.support_edges:
                rest = m.support_edges - {e}
                h = Graph.from_edges(g.order, rest)
                assert find_clique_minor(h, 3) is None

    def test_sorted_and_deterministic(self, wheel5):
        first = enumerate_minimal_minors(wheel5, 4)
        second = enumerate_minimal_minors(wheel5, 4)
        assert first.minors == second.minors
        assert list(first.minors) == sorted(first.minors, key=MinimalMinor.sort_key)


# ==================== Intersections ====================

class TestIntersections:
    def test_disjoint_minors_fall_back_to_own_sets(self):
        a = minor([[0], [1], [2]], [(0, 1), (0, 2), (1, 2)])
        b = minor([[3], [4], [5]], [(3, 4), (3, 5), (4, 5)])
        matrix = pairwise_intersections([a, b])
        assert matrix[0][1] == {0, 1, 2}
        assert matrix[1][0] == {3, 4, 5}

    def test_identical_minors(self):
        a = minor([[0], [1], [2]], [(0, 1), (0, 2), (1, 2)])
        assert pairwise_intersections([a, a])[0][1] == {0, 1, 2}

    def test_shared_vertex(self):
        a = minor([[0], [1], [2]], [(0, 1), (0, 2), (1, 2)])
        b = minor([[2], [3], [4]], [(2, 3), (2, 4), (3, 4)])
        assert pairwise_intersections([a, b])[0][1] == {2}

    def test_single_minor_diagonal(self):
        a = minor([[0], [1], [2]], [(0, 1), (0, 2), (1, 2)])
        assert distinct_intersections(pairwise_intersections([a])) == [frozenset({0, 1, 2})]

    def test_empty_list_rejected(self):
        with pytest.raises(DomainError):
            pairwise_intersections([])


# ==================== Edge deletion by intersections ====================

class TestBreakMinors:
    def test_k4_one_deletion(self, k4):
        result = break_minors_by_intersection(k4, 4)
        assert result.verdict.value == "VERIFIED"
        assert len(result.deleted_edges) == 1

    def test_two_blocks_joined_by_a_path(self):
        g = two_k4_blocks([])
        g = Graph.from_edges(9, list(g.edges) + [(3, 8), (8, 4)])
        result = break_minors_by_intersection(g, 4)
        assert result.verdict.value == "VERIFIED"
        assert len(result.deleted_edges) == 2
        assert len(result.minors) == 2

    def test_no_minor_is_inapplicable(self):
        assert break_minors_by_intersection(path(4), 3).verdict.value == "INAPPLICABLE"

    def test_forest_result_graph(self, c5):
        result = break_minors_by_intersection(c5, 3)
        assert result.verdict.value == "VERIFIED"
        assert is_forest(result.graph)
