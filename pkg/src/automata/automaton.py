"""
Colorings and automata
Turns a colored graph into a deterministic automaton and evaluates reset words
"""

from collections import deque
from dataclasses import dataclass
from typing import Dict, FrozenSet, Iterable, List, Optional, Tuple

import numpy as np

from src.graphs.multigraph import Graph
from src.utils.errors import PreconditionError

LETTER_INDEX = {"a": 0, "b": 1}


@dataclass(frozen=True)
class Coloring:
    """Per state, the edge position labelled a and the one labelled b"""
    a_edges: Tuple[int, ...]
    b_edges: Tuple[int, ...]

    @classmethod
    def from_pairs(cls, pairs: Iterable[Tuple[int, int]]) -> "Coloring":
        pairs = list(pairs)
        return cls(tuple(int(a) for a, _ in pairs), tuple(int(b) for _, b in pairs))

    def pairs(self) -> List[Tuple[int, int]]:
        return list(zip(self.a_edges, self.b_edges))

    def swapped(self) -> "Coloring":
        """Exchange the letters on every state"""
        return Coloring(self.b_edges, self.a_edges)

    def edge_for(self, state: int, letter: str) -> int:
        return self.a_edges[state] if letter == "a" else self.b_edges[state]

    def validate(self, g: Graph) -> None:
        """Raise unless this is a coloring of g (both out-edges used, distinct letters)"""
        if len(self.a_edges) != g.state_count or len(self.b_edges) != g.state_count:
            raise PreconditionError("Coloring does not cover every state")
        for state in g.states():
            labelled = (self.a_edges[state], self.b_edges[state])
            if labelled[0] == labelled[1] or sorted(labelled) != sorted(g.out_edges(state)):
                raise PreconditionError(f"State {state} is not colored by its two out-edges")

    def to_automaton(self, g: Graph) -> "Automaton":
        return automaton_from_coloring(g, self)


class Automaton:
    """Complete DFA over {a, b}; table[s, i] is the successor of s on letter i"""

    def __init__(self, table: np.ndarray):
        table = np.asarray(table, dtype=np.int64)
        if table.ndim != 2 or table.shape[1] != 2 or table.shape[0] < 1:
            raise PreconditionError("Transition table must be an n x 2 array")
        if table.min() < 0 or table.max() >= table.shape[0]:
            raise PreconditionError("Transition table points outside the state range")
        self.table = table

    @property
    def state_count(self) -> int:
        return int(self.table.shape[0])

    def step(self, state: int, letter: str) -> int:
        return int(self.table[state, LETTER_INDEX[letter]])

    def run(self, state: int, w: str) -> int:
        for letter in w:
            state = self.step(state, letter)
        return state

    def __repr__(self) -> str:
        return f"Automaton(states={self.state_count})"


def automaton_from_coloring(g: Graph, coloring: Coloring) -> Automaton:
    coloring.validate(g)
    table = np.array(
        [[g.target(coloring.a_edges[s]), g.target(coloring.b_edges[s])] for s in g.states()],
        dtype=np.int64,
    )
    return Automaton(table)


def apply(a: Automaton, s: Iterable[int], w: str) -> FrozenSet[int]:
    """Image of a state set under w, letters applied left to right"""
    current = np.unique(np.fromiter(s, dtype=np.int64))
    for letter in w:
        current = np.unique(a.table[current, LETTER_INDEX[letter]])
    return frozenset(int(state) for state in current)


def is_reset_word(a: Automaton, w: str) -> bool:
    return len(apply(a, range(a.state_count), w)) == 1


def _merge_tree(a: Automaton) -> Dict[Tuple[int, int], Tuple[str, Tuple[int, int]]]:
    """
    Inverse BFS over state pairs from the diagonal

    Maps each mergeable pair (p, q), p < q, to the first letter of a
    merging word and the pair it leads to.
    """
    n = a.state_count
    preimage = {
        letter: [[] for _ in range(n)] for letter in LETTER_INDEX
    }
    for state in range(n):
        for letter in LETTER_INDEX:
            preimage[letter][a.step(state, letter)].append(state)

    tree: Dict[Tuple[int, int], Tuple[str, Tuple[int, int]]] = {}
    queue = deque((t, t) for t in range(n))
    while queue:
        pair = queue.popleft()
        for letter in LETTER_INDEX:
            for p in preimage[letter][pair[0]]:
                for q in preimage[letter][pair[1]]:
                    if p == q:
                        continue
                    key = (min(p, q), max(p, q))
                    if key not in tree:
                        tree[key] = (letter, pair)
                        queue.append(key)
    return tree


def is_synchronizing(a: Automaton) -> bool:
    """True iff every pair of states can be merged"""
    n = a.state_count
    return len(_merge_tree(a)) == n * (n - 1) // 2


def synchronizing_word(a: Automaton) -> Optional[str]:
    """
    Greedy reset word: repeatedly merge the two smallest surviving states

    Not shortest. None when the automaton is not synchronizing.
    """
    tree = _merge_tree(a)
    n = a.state_count
    if len(tree) != n * (n - 1) // 2:
        return None

    word = ""
    current = frozenset(range(n))
    while len(current) > 1:
        p, q = sorted(current)[:2]
        pair = (p, q)
        piece = ""
        while pair[0] != pair[1]:
            letter, pair = tree[pair]
            piece += letter
        word += piece
        current = apply(a, current, piece)
    return word


class PartialAutomaton:
    """Automaton whose transitions may be undefined"""

    def __init__(self, state_count: int, transitions: Optional[Dict[Tuple[int, str], int]] = None):
        if state_count < 1:
            raise PreconditionError("A partial automaton needs at least one state")
        self.state_count = state_count
        self.transitions: Dict[Tuple[int, str], int] = {}
        for (state, letter), target in (transitions or {}).items():
            self.define(state, letter, target)

    def define(self, state: int, letter: str, target: int) -> None:
        if letter not in LETTER_INDEX:
            raise PreconditionError(f"Unknown letter {letter!r}")
        if not (0 <= state < self.state_count and 0 <= target < self.state_count):
            raise PreconditionError(f"Transition {state} -{letter}-> {target} leaves the state range")
        self.transitions[(state, letter)] = target

    def step(self, state: int, letter: str) -> Optional[int]:
        return self.transitions.get((state, letter))

    def run(self, state: int, w: str) -> Optional[int]:
        """State reached by w, or None if some transition on the way is undefined"""
        current: Optional[int] = state
        for letter in w:
            if current is None:
                return None
            current = self.step(current, letter)
        return current

    def undefined(self) -> List[Tuple[int, str]]:
        """Missing transitions in (state, letter) order"""
        return [
            (state, letter)
            for state in range(self.state_count)
            for letter in LETTER_INDEX
            if (state, letter) not in self.transitions
        ]

    def underlying_graph(self) -> Graph:
        """Defined transitions as a multigraph (for connectivity checks)"""
        edges = tuple(
            (state, self.transitions[(state, letter)])
            for state in range(self.state_count)
            for letter in LETTER_INDEX
            if (state, letter) in self.transitions
        )
        return Graph(self.state_count, edges)
