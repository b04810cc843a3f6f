"""Structural predicates on out-degree-2 multigraphs"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.graphs.generator import random_graph, random_strongly_connected_graph
from src.graphs.multigraph import (
    Graph,
    chain_extension,
    constant_out_degree,
    distances_to,
    distances_to_set,
    induced_subgraph,
    is_aperiodic,
    is_k_lifting,
    level_set,
    require_out_degree_two,
    sink_states,
    strongly_connected,
    strongly_connected_components,
    to_networkx,
)
from src.utils.errors import ParseError, PreconditionError


def _primitive(g: Graph) -> bool:
    """Strongly connected g is aperiodic iff some power of its adjacency matrix is positive"""
    n = g.state_count
    adjacency = np.zeros((n, n), dtype=np.int64)
    for source, target in g.edges:
        adjacency[source, target] = 1
    power = np.eye(n, dtype=np.int64)
    for _ in range((n - 1) ** 2 + 1):
        power = np.minimum(power @ adjacency, 1)
    return bool(power.all())


def test_from_targets_groups_edges_by_state():
    g = Graph.from_targets([[1, 2], [0, 0], [2, 1]])
    assert g.out_edges(1) == (2, 3)
    assert g.successors(2) == (2, 1)
    assert g.other_edge(0, 1) == 0
    assert constant_out_degree(g) == 2


def test_edges_outside_the_state_range_are_rejected():
    with pytest.raises(ParseError):
        Graph(2, ((0, 2),))
    with pytest.raises(ParseError):
        Graph(0, ())


def test_out_degree_checks():
    uneven = Graph(2, ((0, 1), (0, 0), (1, 0)))
    assert constant_out_degree(uneven) is None
    with pytest.raises(PreconditionError):
        require_out_degree_two(uneven)


def test_connectivity_and_components():
    cycle = Graph.from_targets([[1, 1], [2, 2], [0, 0]])
    assert strongly_connected(cycle)
    split = Graph.from_targets([[0, 1], [1, 1]])
    assert not strongly_connected(split)
    assert sorted(map(sorted, strongly_connected_components(split))) == [[0], [1]]


@pytest.mark.parametrize(
    "targets, expected",
    [
        ([[1, 1], [0, 0]], False),
        ([[0, 1], [0, 0]], True),
        ([[1, 1], [2, 2], [0, 1]], True),
        ([[1, 1], [2, 2], [0, 0]], False),
    ],
)
def test_aperiodicity(targets, expected):
    assert is_aperiodic(Graph.from_targets(targets)) is expected


def test_acyclic_graph_is_not_aperiodic():
    assert not is_aperiodic(Graph(2, ((0, 1),)))


def test_distances_and_levels():
    g = Graph.from_targets([[1, 1], [2, 2], [2, 0]])
    assert distances_to(g, 0) == {0: 0, 1: 2, 2: 1}
    assert level_set(g, 0, 2) == frozenset({1})
    assert distances_to_set(g, frozenset({1, 2})) == {0: 1, 1: 0, 2: 0}


def test_unreachable_states_have_no_distance():
    g = Graph.from_targets([[0, 0], [0, 1]])
    assert distances_to(g, 1)[0] is None
    assert sink_states(g) == frozenset({0})


def test_induced_subgraph_keeps_parallel_edges():
    g = Graph.from_targets([[1, 1], [2, 0], [0, 0]])
    sub, index = induced_subgraph(g, frozenset({0, 1}))
    assert index == {0: 0, 1: 1}
    assert sorted(sub.edges) == [(0, 1), (0, 1), (1, 0)]


def test_k_lifting():
    # every state has an edge into V_2(0) = {2}
    g = Graph.from_targets([[2, 1], [0, 2], [1, 2]])
    assert is_k_lifting(g, 2) == 0
    assert is_k_lifting(Graph.from_targets([[0, 0]]), 2) is None


def test_chain_extension_layout():
    g = Graph.from_targets([[0, 1], [1, 0]])
    extended = chain_extension(g, 2)
    assert extended.state_count == 6
    assert extended.successors(2) == (3, 3)
    assert extended.successors(3) == (0, 0)
    assert extended.successors(5) == (1, 1)
    assert chain_extension(g, 0) is g


def test_networkx_copy_is_independent():
    g = Graph.from_targets([[0, 1], [1, 0]])
    copy = to_networkx(g)
    copy.add_edge(0, 0)
    assert g.nx_graph.number_of_edges() == 4


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 7), seed=st.integers(0, 2**32 - 1))
def test_aperiodicity_matches_matrix_primitivity(n, seed):
    g = random_strongly_connected_graph(n, np.random.default_rng(seed))
    assert strongly_connected(g)
    assert is_aperiodic(g) == _primitive(g)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 7), seed=st.integers(0, 2**32 - 1))
def test_distances_decrease_along_some_edge(n, seed):
    g = random_graph(n, np.random.default_rng(seed))
    dist = distances_to(g, 0)
    for state, d in dist.items():
        if d:
            assert any(dist[t] == d - 1 for t in g.successors(state))


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 6), m=st.integers(0, 3), seed=st.integers(0, 2**32 - 1))
def test_chain_extension_preserves_aperiodicity(n, m, seed):
    g = random_graph(n, np.random.default_rng(seed))
    assert is_aperiodic(chain_extension(g, m)) == is_aperiodic(g)


@settings(max_examples=60, deadline=None)
@given(n=st.integers(1, 8), seed=st.integers(0, 2**32 - 1), data=st.data())
def test_levels_partition_the_states_that_reach_q0(n, seed, data):
    g = random_graph(n, np.random.default_rng(seed))
    q0 = data.draw(st.integers(0, n - 1))
    levels = [level_set(g, q0, k) for k in range(n)]
    covered = frozenset().union(*levels)
    assert levels[0] == frozenset({q0})
    assert sum(len(level) for level in levels) == len(covered)
    assert covered == frozenset(s for s, d in distances_to(g, q0).items() if d is not None)
