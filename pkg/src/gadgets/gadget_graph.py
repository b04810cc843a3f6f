"""
Gadget graphs
Role-annotated graphs produced by the reductions, and the builder they share
"""

from dataclasses import dataclass
from functools import cached_property
from typing import Dict, List, Optional, Sequence, Tuple

from src.automata.automaton import Coloring
from src.graphs.multigraph import Graph
from src.utils.errors import PreconditionError
from src.wsat.instance import WSatInstance


@dataclass(frozen=True)
class GadgetGraph:
    """
    A reduction output

    Every state has its two out-edges at positions 2s and 2s+1.
    core_word is the a-initial word the core gadget resets; the graph as a
    whole targets `word` = u . core_word (letters mirrored when swapped).
    """
    graph: Graph
    roles: Tuple[str, ...]
    wsat: WSatInstance
    word: str
    family: str
    core_word: str
    prefix_length: int = 0
    swapped: bool = False
    core_state_count: int = 0
    sink: Optional[int] = None
    base: Optional["GadgetGraph"] = None

    @cached_property
    def role_index(self) -> Dict[str, int]:
        return {role: state for state, role in enumerate(self.roles)}

    def state_of(self, role: str) -> int:
        return self.role_index[role]

    def variable_states(self) -> List[int]:
        return [self.state_of(f"x{i}") for i in range(self.wsat.variable_count)]


class GadgetBuilder:
    """Collects roles first, wires edges second, then freezes a Graph"""

    def __init__(self):
        self.roles: List[str] = []
        self.index: Dict[str, int] = {}
        self.targets: Dict[int, Tuple[int, int]] = {}

    def add(self, role: str) -> int:
        if role in self.index:
            raise PreconditionError(f"Duplicate role {role}")
        self.index[role] = len(self.roles)
        self.roles.append(role)
        return self.index[role]

    def alias(self, role: str, state: int) -> None:
        """Let another role name an existing state (V_{i,k} is D_0, and so on)"""
        self.index[role] = state

    def __getitem__(self, role: str) -> int:
        return self.index[role]

    def wire(self, role: str, first: str, second: str) -> None:
        self.targets[self.index[role]] = (self.index[first], self.index[second])

    def graph(self) -> Graph:
        missing = [self.roles[s] for s in range(len(self.roles)) if s not in self.targets]
        if missing:
            raise PreconditionError(f"Unwired gadget states: {missing}")
        return Graph.from_targets([self.targets[s] for s in range(len(self.roles))])


def coloring_from_a_targets(g: Graph, a_targets: Sequence[int]) -> Coloring:
    """Label a the first out-edge of each state that reaches the given target"""
    pairs = []
    for state in g.states():
        matching = [e for e in g.out_edges(state) if g.target(e) == a_targets[state]]
        if not matching:
            raise PreconditionError(f"State {state} has no edge to {a_targets[state]}")
        pairs.append((matching[0], g.other_edge(state, matching[0])))
    return Coloring.from_pairs(pairs)


def a_targets_of(g: Graph, coloring: Coloring) -> List[int]:
    return [g.target(edge) for edge in coloring.a_edges]
