"""T3 and T4 gadgets: structure, colorings and assignment extraction"""

import pytest

from src.automata.automaton import is_reset_word
from src.automata.oracle import brute_srcw
from src.gadgets.gadget_graph import a_targets_of
from src.gadgets.reductions import (
    T3,
    T4,
    build_gadget_for_word,
    build_gadget_t3,
    build_gadget_t4,
    color_gadget,
    color_gadget_t3,
    color_gadget_t4,
    extract_assignment,
)
from src.graphs.multigraph import constant_out_degree
from src.utils.errors import PreconditionError, UnusedVariableError
from src.wsat.instance import WSatInstance, check, solve

SAT = WSatInstance(2, ((0, 1, 0, 1),))
UNSAT = WSatInstance(1, ((0, 0, 0, 0),))
THREE = WSatInstance(3, ((0, 1, 2, 0), (1, 2, 0, 1)))


def _round_trip(word, phi, family, force=False):
    gadget = build_gadget_for_word(word, phi, family)
    assert constant_out_degree(gadget.graph) == 2
    witness = brute_srcw(gadget.graph, word, force=force)
    solution = solve(phi)
    assert (witness is None) == (solution is None)
    if solution is not None:
        colored = color_gadget(gadget, solution)
        assert is_reset_word(colored.to_automaton(gadget.graph), word)
        assert check(phi, extract_assignment(gadget, witness))
        assert check(phi, extract_assignment(gadget, colored))
    return gadget


def test_t3_gadget_size():
    assert build_gadget_t3(2, SAT).graph.state_count == 10
    assert build_gadget_t3(3, SAT).graph.state_count == 12


def test_t4_gadget_size():
    assert build_gadget_t4(1, 1, THREE).graph.state_count == 16
    assert build_gadget_t4(2, 1, THREE).graph.state_count == 19


def test_gadgets_refuse_unused_variables():
    with pytest.raises(UnusedVariableError):
        build_gadget_t3(2, WSatInstance(2, ((0, 0, 0, 0),)))
    with pytest.raises(PreconditionError):
        build_gadget_t4(0, 1, SAT)


@pytest.mark.parametrize("word", ["abb", "abbb", "aabb", "baa"])
@pytest.mark.parametrize("phi", [SAT, UNSAT])
def test_t3_words(word, phi):
    gadget = _round_trip(word, phi, T3)
    assert gadget.swapped == word.startswith("b")


@pytest.mark.parametrize("word", ["aba", "abba", "abaa"])
@pytest.mark.parametrize("phi", [SAT, UNSAT, THREE])
def test_t4_words(word, phi):
    _round_trip(word, phi, T4)


@pytest.mark.parametrize("word", ["abab", "baba"])
def test_t4_words_with_a_prefix(word):
    gadget = _round_trip(word, SAT, T4)
    assert gadget.prefix_length == 1
    assert gadget.graph.state_count == 2 * gadget.core_state_count


def test_t4_variable_edge_follows_the_assignment():
    gadget = build_gadget_for_word("aba", THREE, T4)
    xi = solve(THREE)
    targets = a_targets_of(gadget.graph, color_gadget(gadget, xi))
    for i in range(THREE.variable_count):
        expected = gadget.state_of("D0") if xi[i] else gadget.state_of(f"W{i}")
        assert targets[gadget.state_of(f"x{i}")] == expected


def test_family_and_class_checks():
    gadget = build_gadget_for_word("abb", SAT, T3)
    with pytest.raises(PreconditionError):
        color_gadget_t4(gadget, solve(SAT))
    assert color_gadget_t3(gadget, solve(SAT)) == color_gadget(gadget, solve(SAT))
    with pytest.raises(PreconditionError):
        build_gadget_for_word("aba", SAT, T3)
    with pytest.raises(PreconditionError):
        build_gadget_for_word("abb", SAT, "t5")
    with pytest.raises(PreconditionError):
        color_gadget(gadget, {0: 0, 1: 0})
