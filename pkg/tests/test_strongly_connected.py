"""Strongly connected composition of the T4 gadget with D(w)"""

import pytest

from src.automata.automaton import is_reset_word
from src.gadgets.reductions import extract_assignment
from src.gadgets.strongly_connected import SC, build_gadget_sc, color_gadget_sc
from src.graphs.multigraph import constant_out_degree, is_aperiodic, strongly_connected
from src.utils.errors import DeviceCompleteError, PreconditionError
from src.wsat.instance import WSatInstance, check, solve

SAT = WSatInstance(2, ((0, 1, 0, 1),))


@pytest.mark.parametrize("word", ["aba", "abba", "abaa", "bab"])
def test_composed_gadget_is_strongly_connected_and_colorable(word):
    gadget = build_gadget_sc(word, SAT)
    g = gadget.graph
    assert gadget.family == SC
    assert constant_out_degree(g) == 2
    assert strongly_connected(g)
    assert is_aperiodic(g)

    coloring = color_gadget_sc(gadget, solve(SAT))
    assert is_reset_word(coloring.to_automaton(g), word)
    assert check(SAT, extract_assignment(gadget, coloring))


def test_layout_for_abba():
    gadget = build_gadget_sc("abba", SAT)
    base = gadget.base.graph.state_count
    assert base == 12
    # two new device states, then one chain of length 3 per non-sink base state
    assert gadget.graph.state_count == base + 2 + (base - 1) * 3
    assert gadget.roles[gadget.base.sink] == "D0=[ε]"
    assert gadget.state_of("[bb]") == base + 1
    assert gadget.state_of("F0,0") == base + 2


def test_complete_device_is_refused():
    with pytest.raises(DeviceCompleteError):
        build_gadget_sc("abab", SAT)


def test_only_t4_words():
    with pytest.raises(PreconditionError):
        build_gadget_sc("abb", SAT)


def test_coloring_needs_a_composed_gadget():
    gadget = build_gadget_sc("aba", SAT)
    with pytest.raises(PreconditionError):
        color_gadget_sc(gadget.base, solve(SAT))
    with pytest.raises(PreconditionError):
        color_gadget_sc(gadget, {0: 0, 1: 0})
