"""
Directed multigraphs
The SRCW instance carrier and the structural predicates every other module uses
"""

from dataclasses import dataclass, field
from functools import cached_property
from math import gcd
from typing import Dict, FrozenSet, List, Optional, Sequence, Tuple

import networkx as nx

from src.utils.errors import ParseError, PreconditionError

StateSet = FrozenSet[int]
Edge = Tuple[int, int]


@dataclass(frozen=True)
class Graph:
    """Directed multigraph; edge identity is the position in `edges`"""
    state_count: int
    edges: Tuple[Edge, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.state_count < 1:
            raise ParseError("A graph needs at least one state")
        object.__setattr__(self, "edges", tuple((int(s), int(t)) for s, t in self.edges))
        for position, (source, target) in enumerate(self.edges):
            if not (0 <= source < self.state_count and 0 <= target < self.state_count):
                raise ParseError(
                    f"Edge {position} ({source}->{target}) leaves the state range 0..{self.state_count - 1}"
                )

    @classmethod
    def from_targets(cls, targets: Sequence[Sequence[int]]) -> "Graph":
        """
        Build a graph from per-state target lists

        Args:
            targets: targets[s] lists the heads of the out-edges of s, in order

        Returns:
            Graph whose edges are grouped by source state
        """
        edges = [(source, target) for source, heads in enumerate(targets) for target in heads]
        return cls(len(targets), tuple(edges))

    @cached_property
    def out_edge_table(self) -> Tuple[Tuple[int, ...], ...]:
        table: List[List[int]] = [[] for _ in range(self.state_count)]
        for position, (source, _target) in enumerate(self.edges):
            table[source].append(position)
        return tuple(tuple(row) for row in table)

    @cached_property
    def nx_graph(self) -> nx.MultiDiGraph:
        graph = nx.MultiDiGraph()
        graph.add_nodes_from(range(self.state_count))
        for position, (source, target) in enumerate(self.edges):
            graph.add_edge(source, target, key=position)
        return graph

    def out_edges(self, state: int) -> Tuple[int, ...]:
        """Edge positions leaving `state`, ascending"""
        return self.out_edge_table[state]

    def target(self, edge: int) -> int:
        return self.edges[edge][1]

    def successors(self, state: int) -> Tuple[int, ...]:
        return tuple(self.edges[e][1] for e in self.out_edges(state))

    def other_edge(self, state: int, edge: int) -> int:
        """The second out-edge of a state of out-degree 2"""
        first, second = self.out_edges(state)
        return second if edge == first else first

    def states(self) -> range:
        return range(self.state_count)


def constant_out_degree(g: Graph) -> Optional[int]:
    """Return k if every state has out-degree exactly k (k >= 1), else None"""
    degrees = {len(g.out_edges(s)) for s in g.states()}
    if len(degrees) == 1:
        degree = degrees.pop()
        return degree if degree > 0 else None
    return None


def require_out_degree_two(g: Graph) -> None:
    if constant_out_degree(g) != 2:
        raise PreconditionError("Graph must have constant out-degree 2")


def strongly_connected_components(g: Graph) -> List[StateSet]:
    return [frozenset(component) for component in nx.strongly_connected_components(g.nx_graph)]


def strongly_connected(g: Graph) -> bool:
    return nx.is_strongly_connected(g.nx_graph)


def _component_period(g: Graph, component: StateSet) -> int:
    """gcd of cycle lengths inside one SCC (0 if it carries no cycle)"""
    root = min(component)
    level = {root: 0}
    frontier = [root]
    while frontier:
        next_frontier = []
        for state in frontier:
            for successor in g.successors(state):
                if successor in component and successor not in level:
                    level[successor] = level[state] + 1
                    next_frontier.append(successor)
        frontier = next_frontier

    period = 0
    for source, target in g.edges:
        if source in component and target in component:
            period = gcd(period, abs(level[source] + 1 - level[target]))
    return period


def is_aperiodic(g: Graph) -> bool:
    """
    True iff the gcd of all directed cycle lengths is 1

    Acyclic graphs count as periodic (gcd over an empty set is 0).
    """
    period = 0
    for component in strongly_connected_components(g):
        period = gcd(period, _component_period(g, component))
    return period == 1


def distances_to(g: Graph, q0: int) -> Dict[int, Optional[int]]:
    """
    Shortest directed path length from every state to q0

    Args:
        g: Graph
        q0: Destination state

    Returns:
        Mapping state -> distance, None where q0 is unreachable
    """
    if not 0 <= q0 < g.state_count:
        raise PreconditionError(f"State {q0} is out of range")
    lengths = nx.single_source_shortest_path_length(g.nx_graph.reverse(copy=False), q0)
    return {s: lengths.get(s) for s in g.states()}


def distances_to_set(g: Graph, targets: StateSet) -> Dict[int, Optional[int]]:
    """Shortest directed path length from every state into a nonempty target set"""
    if not targets:
        raise PreconditionError("Target set must be nonempty")
    lengths = nx.multi_source_dijkstra_path_length(g.nx_graph.reverse(copy=False), set(targets))
    return {s: lengths.get(s) for s in g.states()}


def level_set(g: Graph, q0: int, k: int) -> StateSet:
    """V_k(q0): the states at distance exactly k from q0"""
    return frozenset(s for s, d in distances_to(g, q0).items() if d == k)


def induced_subgraph(g: Graph, r: StateSet) -> Tuple[Graph, Dict[int, int]]:
    """
    G[R] with multiplicities preserved

    Returns:
        (subgraph, index map old state -> new state)
    """
    kept = sorted(r)
    if not kept:
        raise PreconditionError("Induced subgraph needs a nonempty state set")
    index = {old: new for new, old in enumerate(kept)}
    edges = tuple((index[s], index[t]) for s, t in g.edges if s in index and t in index)
    return Graph(len(kept), edges), index


def sink_states(g: Graph) -> StateSet:
    """States whose out-edges are exactly two self-loops"""
    return frozenset(
        s for s in g.states()
        if len(g.out_edges(s)) == 2 and all(t == s for t in g.successors(s))
    )


def is_k_lifting(g: Graph, k: int) -> Optional[int]:
    """
    Smallest q0 such that every state has an edge into V_k(q0)

    For k = 2 this is plain "lifting".
    """
    require_out_degree_two(g)
    for q0 in g.states():
        target_level = level_set(g, q0, k)
        if target_level and all(
            any(t in target_level for t in g.successors(s)) for s in g.states()
        ):
            return q0
    return None


def chain_extension(g: Graph, m: int) -> Graph:
    """
    Feed every state q by a fresh chain c_{q,1} => ... => c_{q,m} => q

    Each chain state carries two parallel edges to its successor, so any
    coloring needs exactly m steps to leave the chain. Chain states are
    appended after the original ones, chain of q at n + q*m + (j-1).
    """
    require_out_degree_two(g)
    if m < 0:
        raise PreconditionError("Chain length must be nonnegative")
    if m == 0:
        return g

    n = g.state_count
    edges = list(g.edges)
    for q in range(n):
        for j in range(1, m + 1):
            state = n + q * m + (j - 1)
            successor = state + 1 if j < m else q
            edges.extend([(state, successor), (state, successor)])
    return Graph(n * (m + 1), tuple(edges))


def to_networkx(g: Graph) -> nx.MultiDiGraph:
    """Independent networkx copy; edge keys are edge positions"""
    return g.nx_graph.copy()
