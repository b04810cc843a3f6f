"""Lifting colorings and the abb decider on strongly connected graphs"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.automata.automaton import apply, is_reset_word
from src.automata.oracle import brute_srcw
from src.deciders.lifting import AbbEncoding, decide_abb_sc, lifting_coloring
from src.deciders.twosat import twosat_solve
from src.graphs.generator import all_out_degree_two_graphs, random_lifting_graph, random_strongly_connected_graph
from src.graphs.multigraph import Graph, distances_to, is_k_lifting, level_set, strongly_connected
from src.utils.errors import PreconditionError


def _agrees(g):
    fast = decide_abb_sc(g)
    slow = brute_srcw(g, "abb")
    assert (fast is None) == (slow is None), g
    if fast is not None:
        assert is_reset_word(fast.to_automaton(g), "abb")


def test_lifting_coloring_on_a_small_graph():
    g = Graph.from_targets([[2, 1], [0, 2], [1, 2]])
    coloring = lifting_coloring(g, 2, 0)
    assert is_reset_word(coloring.to_automaton(g), "abb")


def test_lifting_coloring_needs_lifting():
    with pytest.raises(PreconditionError):
        lifting_coloring(Graph.from_targets([[1, 1], [0, 0]]), 2, 0)


def test_decider_needs_strong_connectivity():
    with pytest.raises(PreconditionError):
        decide_abb_sc(Graph.from_targets([[0, 1], [1, 1]]))


def test_periodic_cycle_is_rejected():
    assert decide_abb_sc(Graph.from_targets([[1, 1], [2, 2], [0, 0]])) is None


@pytest.mark.parametrize("n", [1, 2, 3, 4])
def test_exhaustive_strongly_connected_graphs(n):
    for g in all_out_degree_two_graphs(n):
        if strongly_connected(g):
            _agrees(g)


@settings(max_examples=150, deadline=None)
@given(n=st.integers(5, 9), seed=st.integers(0, 2**32 - 1))
def test_random_strongly_connected_graphs(n, seed):
    _agrees(random_strongly_connected_graph(n, np.random.default_rng(seed)))


@settings(max_examples=80, deadline=None)
@given(k=st.integers(1, 3), extra=st.integers(0, 8), seed=st.integers(0, 2**32 - 1))
def test_lifting_graphs_reset_a_b_to_the_k(k, extra, seed):
    g = random_lifting_graph(k + 1 + extra, k, np.random.default_rng(seed))
    q0 = is_k_lifting(g, k)
    coloring = lifting_coloring(g, k, q0)
    assert is_reset_word(coloring.to_automaton(g), "a" + "b" * k)


def test_encoding_uses_component_variants_and_a_states():
    # V_1(0) = {1, 2} joined by 1 -> 2; 0 is the only state with both edges into V_1
    g = Graph.from_targets([[1, 2], [0, 2], [0, 3], [2, 3]])
    assert is_k_lifting(g, 2) is None
    encoding = AbbEncoding(g, 0, distances_to(g, 0))
    assert encoding.consistent
    assert encoding.components == [frozenset({1, 2})]
    assert encoding.inner == {1: 3}
    assert encoding.variant == {1: (0, False)}
    assert encoding.x == {0: 1}
    assert twosat_solve(encoding.formula) == {0: True, 1: True}


def test_decoded_witness_follows_variant_one():
    g = Graph.from_targets([[1, 2], [0, 2], [0, 3], [2, 3]])
    coloring = decide_abb_sc(g)
    assert coloring.a_edges == (0, 2, 5, 7)
    assert is_reset_word(coloring.to_automaton(g), "abb")


def test_encoding_without_solution():
    g = Graph.from_targets([[1, 3], [0, 2], [0, 3], [1, 1]])
    encoding = AbbEncoding(g, 0, distances_to(g, 0))
    assert encoding.x == {3: 1}
    assert twosat_solve(encoding.formula) is None


def test_odd_cycle_in_level_one_is_inconsistent():
    # 1 -> 2 -> 3 -> 1 inside V_1(0)
    g = Graph.from_targets([[1, 2], [0, 2], [0, 3], [0, 1]])
    assert not AbbEncoding(g, 0, distances_to(g, 0)).consistent


@settings(max_examples=150, deadline=None)
@given(n=st.integers(4, 9), seed=st.integers(0, 2**32 - 1))
def test_encoded_witnesses_label_edges_into_level_two_a(n, seed):
    g = random_strongly_connected_graph(n, np.random.default_rng(seed))
    coloring = decide_abb_sc(g)
    if coloring is None or is_k_lifting(g, 2) is not None:
        return
    (q0,) = apply(coloring.to_automaton(g), g.states(), "abb")
    for edge, (_source, target) in enumerate(g.edges):
        if target in level_set(g, q0, 2):
            assert edge in coloring.a_edges
