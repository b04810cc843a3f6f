"""T1 and T2 deciders against the oracle"""

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.automata.automaton import is_reset_word
from src.automata.oracle import brute_srcw
from src.deciders.power_words import decide_t1, decide_t2
from src.graphs.generator import all_out_degree_two_graphs, random_graph
from src.graphs.multigraph import Graph
from src.utils.errors import PreconditionError

T1_WORDS = ["a", "aa", "bbb"]
T2_WORDS = ["ab", "ba", "aab", "bbba"]


def _agrees(decider, g, w):
    fast = decider(g, w)
    slow = brute_srcw(g, w)
    assert (fast is None) == (slow is None), (g, w)
    if fast is not None:
        assert is_reset_word(fast.to_automaton(g), w)


def test_empty_word():
    assert decide_t1(Graph.from_targets([[0, 0]]), "") is not None
    with pytest.raises(PreconditionError):
        decide_t1(Graph.from_targets([[0, 1], [1, 0]]), "")


def test_wrong_class_is_rejected():
    g = Graph.from_targets([[0, 1], [1, 0]])
    with pytest.raises(PreconditionError):
        decide_t1(g, "ab")
    with pytest.raises(PreconditionError):
        decide_t2(g, "abb")


def test_t1_needs_a_loop():
    assert decide_t1(Graph.from_targets([[1, 1], [0, 0]]), "aaaa") is None
    assert decide_t1(Graph.from_targets([[0, 1], [0, 0]]), "a") is not None


@pytest.mark.parametrize("n", [1, 2, 3])
def test_exhaustive_small_graphs(n):
    for g in all_out_degree_two_graphs(n):
        for w in T1_WORDS:
            _agrees(decide_t1, g, w)
        for w in T2_WORDS:
            _agrees(decide_t2, g, w)


@settings(max_examples=120, deadline=None)
@given(
    n=st.integers(4, 7),
    seed=st.integers(0, 2**32 - 1),
    k=st.integers(1, 4),
    x=st.sampled_from("ab"),
)
def test_random_graphs(n, seed, k, x):
    g = random_graph(n, np.random.default_rng(seed))
    y = "b" if x == "a" else "a"
    _agrees(decide_t1, g, x * k)
    _agrees(decide_t2, g, x * k + y)
