"""
Lifting graphs and the abb decider for strongly connected graphs
"""

from typing import Dict, FrozenSet, List, Optional, Tuple, Union

import networkx as nx

from src.automata.automaton import Coloring, is_reset_word
from src.deciders.twosat import Literal, TwoSatFormula, neg, twosat_solve
from src.graphs.multigraph import (
    Graph,
    distances_to,
    is_k_lifting,
    require_out_degree_two,
    strongly_connected,
)
from src.utils.console import say
from src.utils.errors import PreconditionError, WitnessError

ABB = "abb"

# A condition is a literal or one of the constants TRUE and FALSE
TRUE = "true"
FALSE = "false"
Condition = Union[Literal, str]


def lifting_coloring(g: Graph, k: int, q0: int) -> Coloring:
    """
    Coloring of a k-lifting graph under which a b^k resets to q0

    Every state labels a one edge into V_k(q0). For states on levels
    1..k the remaining edge is the distance-decreasing one and gets b.

    Raises:
        PreconditionError: some state has no edge into V_k(q0)
    """
    require_out_degree_two(g)
    dist = distances_to(g, q0)
    pairs = []
    for state in g.states():
        into_level = [e for e in g.out_edges(state) if dist[g.target(e)] == k]
        if not into_level:
            raise PreconditionError(f"State {state} has no edge into V_{k}({q0})")
        a_edge = into_level[0]
        pairs.append((a_edge, g.other_edge(state, a_edge)))

    coloring = Coloring.from_pairs(pairs)
    word = "a" + "b" * k
    if not is_reset_word(coloring.to_automaton(g), word):
        raise WitnessError(f"Lifting coloring does not reset {word!r}")
    return coloring


def _loop_witness(g: Graph, q0: int, dist: Dict[int, Optional[int]]) -> Coloring:
    """b on the loop of q0 and on one distance-decreasing edge everywhere else"""
    pairs = []
    for state in g.states():
        if state == q0:
            b_edge = next(e for e in g.out_edges(q0) if g.target(e) == q0)
        else:
            b_edge = next(e for e in g.out_edges(state) if dist[g.target(e)] == dist[state] - 1)
        pairs.append((g.other_edge(state, b_edge), b_edge))
    return Coloring.from_pairs(pairs)


class AbbEncoding:
    """
    2-SAT encoding of "abb resets to q0" on a non-lifting graph where q0
    has no loop and V_3(q0) is empty

    Edges into V_2 are labelled a. Consecutive edges inside V_1 alternate,
    so a component B of G[V_1] has two labelings: variant 0 labels its
    lowest-position internal edge a and y_B selects variant 1. A state of
    V_2 or q0 whose edges both enter V_1 belongs to A and owns x_s, "its
    lower edge is labelled a". Every other edge has a single label.
    """

    def __init__(self, g: Graph, q0: int, dist: Dict[int, Optional[int]]):
        self.g = g
        self.q0 = q0
        self.dist = dist
        self.formula = TwoSatFormula()
        self.consistent = True
        self.components: List[FrozenSet[int]] = []
        # V_1 state -> its edge into V_1
        self.inner: Dict[int, int] = {}
        # V_1 state -> (y_B, value of y_B under which its inner edge is a)
        self.variant: Dict[int, Literal] = {}
        self.x: Dict[int, int] = {}

        level1 = [s for s in g.states() if dist[s] == 1]
        for state in level1:
            for edge in g.out_edges(state):
                if dist[g.target(edge)] == 1:
                    self.inner[state] = edge
        self._find_variants(level1)

        outer = [s for s in g.states() if dist[s] != 1]
        for state in outer:
            inner_targets = [t for t in g.successors(state) if dist[t] == 1]
            if not inner_targets:
                # both edges would be labelled a
                self.consistent = False
            elif len(inner_targets) == 2:
                self.x[state] = self.formula.new_variable()
        if not self.consistent:
            return

        self.incoming: Dict[int, List[int]] = {s: [] for s in level1}
        for edge, (_source, target) in enumerate(g.edges):
            if target in self.incoming:
                self.incoming[target].append(edge)
        for state in outer:
            self._encode_outer(state)
        for state in level1:
            self._encode_level1(state)

    def _find_variants(self, level1: List[int]) -> None:
        links = nx.Graph()
        links.add_nodes_from(level1)
        links.add_edges_from((s, self.g.target(e)) for s, e in self.inner.items())
        for members in nx.connected_components(links):
            block = links.subgraph(members)
            self.components.append(frozenset(members))
            if nx.number_of_selfloops(block) or not nx.is_bipartite(block):
                # an odd cycle cannot alternate
                self.consistent = False
                return
            owners = [s for s in members if s in self.inner]
            if not owners:
                continue
            side = nx.bipartite.color(block)
            first = min(owners, key=self.inner.__getitem__)
            y = self.formula.new_variable()
            for state in owners:
                self.variant[state] = (y, side[state] != side[first])

    def b_enters_q0(self, state: int) -> Condition:
        """b(state) = q0 for a V_1 state: its inner edge, if any, is labelled a"""
        return self.variant.get(state, TRUE)

    def inner_is_b(self, state: int) -> Condition:
        if state not in self.variant:
            return FALSE
        return neg(self.variant[state])

    def labelled_a(self, edge: int) -> Condition:
        """Condition for an edge ending in V_1 to carry a"""
        source = self.g.edges[edge][0]
        if self.dist[source] == 1:
            return self.variant[source]
        if source in self.x:
            return self.x[source], edge == self.g.out_edges(source)[0]
        return FALSE

    def require(self, premise: Condition, conclusion: Condition) -> None:
        """premise -> conclusion"""
        if premise == FALSE or conclusion == TRUE:
            return
        if conclusion == FALSE:
            if premise == TRUE:
                self.consistent = False
            else:
                self.formula.add_unit(neg(premise))
        elif premise == TRUE:
            self.formula.add_unit(conclusion)
        else:
            self.formula.add_implication(premise, conclusion)

    def _encode_outer(self, state: int) -> None:
        """States of V_2 and q0 all lie in the image of a, so bb must end in q0"""
        g = self.g
        if state in self.x:
            low, high = g.out_edges(state)
            self.require((self.x[state], True), self.b_enters_q0(g.target(high)))
            self.require((self.x[state], False), self.b_enters_q0(g.target(low)))
        else:
            target = next(t for t in g.successors(state) if self.dist[t] == 1)
            self.require(TRUE, self.b_enters_q0(target))

    def _encode_level1(self, state: int) -> None:
        """A V_1 state entered by a must leave by b inside V_1 and then enter q0"""
        for edge in self.incoming[state]:
            premise = self.labelled_a(edge)
            self.require(premise, self.inner_is_b(state))
            if state in self.inner:
                self.require(premise, self.b_enters_q0(self.g.target(self.inner[state])))

    def decode(self, assignment: Dict[int, bool]) -> Coloring:
        g = self.g
        pairs: List[Tuple[int, int]] = []
        for state in g.states():
            low, high = g.out_edges(state)
            if state in self.x:
                pairs.append((low, high) if assignment[self.x[state]] else (high, low))
            elif state in self.inner:
                inner = self.inner[state]
                other = g.other_edge(state, inner)
                y, value = self.variant[state]
                pairs.append((inner, other) if assignment[y] == value else (other, inner))
            elif self.dist[g.target(high)] == 2:
                pairs.append((high, low))
            else:
                pairs.append((low, high))
        return Coloring.from_pairs(pairs)



def decide_abb_sc(g: Graph) -> Optional[Coloring]:
    """
    Decide whether some coloring makes abb a reset word

    Args:
        g: Strongly connected out-degree-2 graph

    Returns:
        Witness coloring or None
    """
    require_out_degree_two(g)
    if not strongly_connected(g):
        raise PreconditionError("The abb decider needs a strongly connected graph")

    lifted = is_k_lifting(g, 2)
    if lifted is not None:
        say(f"✅ abb: graph is lifting at q0={lifted}")
        return lifting_coloring(g, 2, lifted)

    for q0 in g.states():
        dist = distances_to(g, q0)
        if max(dist.values()) > 2:
            continue
        if q0 in g.successors(q0):
            say(f"✅ abb: loop on q0={q0}, bb already resets")
            return _checked(g, _loop_witness(g, q0, dist))

        encoding = AbbEncoding(g, q0, dist)
        if not encoding.consistent:
            continue
        assignment = twosat_solve(encoding.formula)
        say(
            f"🔍 abb: q0={q0}, {len(encoding.components)} component(s) in V_1, "
            f"|A|={len(encoding.x)}, {len(encoding.formula.clauses)} clauses"
        )
        if assignment is None:
            continue
        return _checked(g, encoding.decode(assignment))
    return None


def _checked(g: Graph, coloring: Coloring) -> Coloring:
    if not is_reset_word(coloring.to_automaton(g), ABB):
        raise WitnessError("abb witness failed verification")
    return coloring
