"""
Polynomial deciders for T1 and T2 words
x^k needs a looped state everyone reaches in k steps; x^k y needs a
cycle-bearing set R of q0's predecessors everyone reaches in k steps
"""

from typing import Dict, Optional, Set

from src.automata.automaton import Coloring, is_reset_word
from src.graphs.multigraph import Graph, distances_to, distances_to_set, require_out_degree_two
from src.utils.console import say
from src.utils.errors import PreconditionError, WitnessError
from src.words.binary_words import WordClass, classify, runs


def _coloring_from_choice(g: Graph, chosen: Dict[int, int], letter: str) -> Coloring:
    """Label the chosen edge of each state with `letter`, the other edge with the other letter"""
    pairs = []
    for state in g.states():
        picked = chosen[state]
        rest = g.other_edge(state, picked)
        pairs.append((picked, rest) if letter == "a" else (rest, picked))
    return Coloring.from_pairs(pairs)


def _verified(g: Graph, coloring: Coloring, w: str) -> Coloring:
    if not is_reset_word(coloring.to_automaton(g), w):
        raise WitnessError(f"Constructed coloring does not reset {w!r}")
    return coloring


def _closer_edge(g: Graph, state: int, dist: Dict[int, Optional[int]]) -> int:
    """Lowest-position out-edge that decreases the distance by one"""
    for edge in g.out_edges(state):
        if dist[g.target(edge)] == dist[state] - 1:
            return edge
    raise WitnessError(f"State {state} has no distance-decreasing edge")


def decide_t1(g: Graph, w: str) -> Optional[Coloring]:
    """
    Decide SRCW for w = x^k

    Args:
        g: Out-degree-2 graph
        w: Word in T1

    Returns:
        Witness coloring or None
    """
    require_out_degree_two(g)
    if classify(w) != WordClass.T1:
        raise PreconditionError(f"Word {w!r} is not a power of one letter")
    if not w:
        if g.state_count > 1:
            raise PreconditionError("The empty word resets only the one-state graph")
        low, high = g.out_edges(0)
        return Coloring((low,), (high,))

    x, k = w[0], len(w)
    for q0 in g.states():
        loops = [e for e in g.out_edges(q0) if g.target(e) == q0]
        if not loops:
            continue
        dist = distances_to(g, q0)
        if any(d is None or d > k for d in dist.values()):
            continue

        chosen = {q0: loops[0]}
        for state in g.states():
            if state != q0:
                chosen[state] = _closer_edge(g, state, dist)
        say(f"✅ T1: every state reaches looped state {q0} within {k} steps")
        return _verified(g, _coloring_from_choice(g, chosen, x), w)
    return None


def _cycle_bearing(g: Graph, q1: Set[int], q0: int) -> Dict[int, Optional[int]]:
    """
    H1 successor edges: for s in Q1, the edge left after dropping one s->q0 copy

    Returns the H1 edge per state in Q1 (None when it leaves Q1).
    """
    h1 = {}
    for state in q1:
        to_q0 = next(e for e in g.out_edges(state) if g.target(e) == q0)
        rest = g.other_edge(state, to_q0)
        h1[state] = rest if g.target(rest) in q1 else None
    return h1


def _states_on_cycles(g: Graph, h1: Dict[int, Optional[int]]) -> Set[int]:
    """States whose H1 walk never gets stuck (H1 is functional)"""
    alive = {s for s, edge in h1.items() if edge is not None}
    changed = True
    while changed:
        changed = False
        for state in list(alive):
            if g.target(h1[state]) not in alive:
                alive.discard(state)
                changed = True
    return alive


def decide_t2(g: Graph, w: str) -> Optional[Coloring]:
    """
    Decide SRCW for w = x^k y, k >= 1

    For each q0: Q1 are the states with an edge into q0, H1 is G[Q1]
    minus one copy of every edge into q0, and R the states of Q1 from
    which H1 reaches a cycle. Accept when all states are within k of R.
    """
    require_out_degree_two(g)
    if classify(w) != WordClass.T2:
        raise PreconditionError(f"Word {w!r} is not of the form x^k y")
    (x, k), _tail = runs(w)

    for q0 in g.states():
        dist = distances_to(g, q0)
        if any(d is None or d > k + 1 for d in dist.values()):
            continue
        q1 = {s for s in g.states() if q0 in g.successors(s)}
        h1 = _cycle_bearing(g, q1, q0)
        r = _states_on_cycles(g, h1)
        if not r:
            continue
        to_r = distances_to_set(g, frozenset(r))
        if any(d is None or d > k for d in to_r.values()):
            continue

        chosen = {}
        for state in g.states():
            chosen[state] = h1[state] if state in r else _closer_edge(g, state, to_r)
        say(f"✅ T2: q0={q0}, |Q1|={len(q1)}, |R|={len(r)}")
        return _verified(g, _coloring_from_choice(g, chosen, x), w)
    return None
