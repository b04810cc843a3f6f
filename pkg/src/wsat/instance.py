"""
W-SAT instances
Clauses are 4-tuples (z1, z2, z3, z4) satisfied when some z is 1,
one of z1, z2 is 0 and one of z3, z4 is 0
"""

from dataclasses import dataclass, field
from itertools import product
from typing import Dict, Optional, Sequence, Tuple

import numpy as np

from src.utils.console import say
from src.utils.errors import ParseError, PreconditionError, ResourceLimitError, UnusedVariableError
from src.utils.settings import get_settings

Clause = Tuple[int, int, int, int]
Assignment = Dict[int, int]


@dataclass(frozen=True)
class WSatInstance:
    variable_count: int
    clauses: Tuple[Clause, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.variable_count < 0:
            raise ParseError("Variable count must be nonnegative")
        normalized = []
        for position, clause in enumerate(self.clauses):
            clause = tuple(int(z) for z in clause)
            if len(clause) != 4:
                raise ParseError(f"Clause {position} has {len(clause)} entries, expected 4")
            if any(not 0 <= z < self.variable_count for z in clause):
                raise ParseError(f"Clause {position} names a variable outside 0..{self.variable_count - 1}")
            normalized.append(clause)
        object.__setattr__(self, "clauses", tuple(normalized))

    def unused_variables(self) -> Tuple[int, ...]:
        used = {z for clause in self.clauses for z in clause}
        return tuple(v for v in range(self.variable_count) if v not in used)

    def require_gadget_ready(self) -> None:
        """Gadget builders need at least one clause and every variable in some clause"""
        if not self.clauses:
            raise PreconditionError("Gadgets need at least one clause")
        unused = self.unused_variables()
        if unused:
            raise UnusedVariableError(f"Variables {list(unused)} occur in no clause")


def clause_satisfied(clause: Clause, xi: Assignment) -> bool:
    z1, z2, z3, z4 = (xi[z] for z in clause)
    return (1 in (z1, z2, z3, z4)) and (0 in (z1, z2)) and (0 in (z3, z4))


def check(phi: WSatInstance, xi: Assignment) -> bool:
    """True iff xi satisfies every clause"""
    missing = [v for v in range(phi.variable_count) if v not in xi]
    if missing:
        raise PreconditionError(f"Assignment leaves variables {missing} unset")
    return all(clause_satisfied(clause, xi) for clause in phi.clauses)


def solve(phi: WSatInstance) -> Optional[Assignment]:
    """
    Lexicographically first satisfying assignment (variable 0 most significant)

    Raises:
        ResourceLimitError: more variables than SRCW_WSAT_CAP
    """
    cap = get_settings().wsat_cap
    if phi.variable_count > cap:
        raise ResourceLimitError(f"W-SAT enumeration refuses {phi.variable_count} variables (cap {cap})")

    for values in product((0, 1), repeat=phi.variable_count):
        xi = dict(enumerate(values))
        if all(clause_satisfied(clause, xi) for clause in phi.clauses):
            return xi
    return None


def random_instance(
    variable_count: int,
    clause_count: int,
    rng: np.random.Generator,
    cover_all: bool = True,
) -> WSatInstance:
    """
    Seeded random instance

    With cover_all, variables missing from the drawn clauses are written
    over random clause positions so every variable occurs.
    """
    if variable_count < 1 or clause_count < 1:
        raise PreconditionError("Need at least one variable and one clause")
    if cover_all and variable_count > 4 * clause_count:
        raise PreconditionError("Too few clause positions to cover every variable")

    cells = rng.integers(0, variable_count, size=(clause_count, 4))
    if cover_all:
        slots = rng.permutation(4 * clause_count)
        for variable, slot in zip(range(variable_count), slots):
            cells[slot // 4, slot % 4] = variable
    phi = WSatInstance(variable_count, tuple(tuple(int(z) for z in row) for row in cells))
    say(f"🔄 Random W-SAT instance: {variable_count} variables, {clause_count} clauses")
    return phi


def instance_matrix() -> Sequence[WSatInstance]:
    """Fixed small instances, satisfiable and not, every variable used"""
    return (
        WSatInstance(1, ((0, 0, 0, 0),)),
        WSatInstance(2, ((0, 1, 0, 1),)),
        WSatInstance(2, ((0, 1, 1, 0),)),
        WSatInstance(2, ((0, 0, 1, 1),)),
        WSatInstance(2, ((1, 1, 0, 0),)),
        WSatInstance(2, ((0, 1, 0, 1), (1, 0, 1, 0))),
        WSatInstance(2, ((0, 0, 1, 1), (1, 1, 0, 0))),
        WSatInstance(2, ((0, 1, 0, 0), (1, 1, 1, 1))),
        WSatInstance(3, ((0, 1, 2, 2),)),
        WSatInstance(3, ((0, 1, 1, 2),)),
        WSatInstance(3, ((0, 0, 1, 2), (2, 2, 2, 2))),
        WSatInstance(3, ((0, 1, 0, 2), (2, 1, 0, 1))),
        WSatInstance(3, ((0, 1, 2, 0), (1, 2, 0, 1))),
        WSatInstance(3, ((0, 0, 0, 1), (2, 2, 1, 1))),
        WSatInstance(3, ((2, 0, 1, 1), (0, 2, 2, 1))),
        WSatInstance(3, ((0, 1, 2, 1), (0, 0, 2, 2))),
        WSatInstance(1, ((0, 0, 0, 0), (0, 0, 0, 0))),
        WSatInstance(2, ((0, 0, 0, 1), (1, 1, 1, 0))),
        WSatInstance(3, ((0, 2, 1, 2), (1, 1, 0, 2))),
        WSatInstance(3, ((1, 2, 0, 0), (0, 0, 1, 2))),
    )
