"""
2-SAT
Implication graph plus strongly connected components
"""

from dataclasses import dataclass, field
from typing import Dict, List, Optional, Tuple

import networkx as nx

from src.utils.errors import PreconditionError

# (variable index, polarity); polarity True means the positive literal
Literal = Tuple[int, bool]


def neg(literal: Literal) -> Literal:
    return literal[0], not literal[1]


@dataclass
class TwoSatFormula:
    variable_count: int = 0
    clauses: List[Tuple[Literal, Literal]] = field(default_factory=list)

    def new_variable(self) -> int:
        self.variable_count += 1
        return self.variable_count - 1

    def _check(self, literal: Literal) -> None:
        if not 0 <= literal[0] < self.variable_count:
            raise PreconditionError(f"Literal variable {literal[0]} out of range")

    def add_clause(self, first: Literal, second: Literal) -> None:
        """first OR second"""
        self._check(first)
        self._check(second)
        self.clauses.append((first, second))

    def add_unit(self, literal: Literal) -> None:
        self.add_clause(literal, literal)

    def add_implication(self, premise: Literal, conclusion: Literal) -> None:
        self.add_clause(neg(premise), conclusion)


def _node(literal: Literal) -> int:
    return 2 * literal[0] + (0 if literal[1] else 1)


def twosat_solve(f: TwoSatFormula) -> Optional[Dict[int, bool]]:
    """
    Satisfying assignment or None

    A variable is true when its positive literal's component comes later
    in topological order than the negative one. Variables in no clause are
    false.
    """
    graph = nx.DiGraph()
    graph.add_nodes_from(range(2 * f.variable_count))
    for first, second in f.clauses:
        graph.add_edge(_node(neg(first)), _node(second))
        graph.add_edge(_node(neg(second)), _node(first))

    dag = nx.condensation(graph)
    component = dag.graph["mapping"]
    order = {c: position for position, c in enumerate(nx.topological_sort(dag))}

    used = {literal[0] for clause in f.clauses for literal in clause}
    assignment: Dict[int, bool] = {}
    for variable in range(f.variable_count):
        positive = component[2 * variable]
        negative = component[2 * variable + 1]
        if positive == negative:
            return None
        assignment[variable] = variable in used and order[positive] > order[negative]
    return assignment
