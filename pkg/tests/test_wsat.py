"""W-SAT instances and the exhaustive solver"""

from itertools import product

import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from src.utils.errors import ParseError, PreconditionError, ResourceLimitError, UnusedVariableError
from src.utils.settings import get_settings
from src.wsat.instance import (
    WSatInstance,
    check,
    clause_satisfied,
    instance_matrix,
    random_instance,
    solve,
)


@pytest.mark.parametrize(
    "values, expected",
    [
        ((1, 0, 0, 1), True),
        ((0, 0, 0, 0), False),
        ((1, 1, 0, 0), False),
        ((0, 0, 1, 1), False),
        ((0, 1, 1, 0), True),
    ],
)
def test_clause_semantics(values, expected):
    assert clause_satisfied((0, 1, 2, 3), dict(enumerate(values))) is expected


def test_solver_returns_the_first_assignment():
    assert solve(WSatInstance(2, ((0, 1, 0, 1),))) == {0: 0, 1: 1}
    assert solve(WSatInstance(1, ((0, 0, 0, 0),))) is None


def test_check_needs_every_variable():
    phi = WSatInstance(2, ((0, 1, 0, 1),))
    assert check(phi, {0: 1, 1: 0})
    with pytest.raises(PreconditionError):
        check(phi, {0: 1})


def test_parse_errors():
    with pytest.raises(ParseError):
        WSatInstance(2, ((0, 1, 2, 0),))
    with pytest.raises(ParseError):
        WSatInstance(2, ((0, 1, 1),))


def test_gadget_readiness():
    with pytest.raises(UnusedVariableError):
        WSatInstance(2, ((0, 0, 0, 0),)).require_gadget_ready()
    with pytest.raises(PreconditionError):
        WSatInstance(1, ()).require_gadget_ready()


def test_solver_cap(monkeypatch):
    monkeypatch.setattr(get_settings(), "wsat_cap", 1)
    with pytest.raises(ResourceLimitError):
        solve(WSatInstance(2, ((0, 1, 0, 1),)))


def test_instance_matrix_is_gadget_ready():
    matrix = instance_matrix()
    for phi in matrix:
        phi.require_gadget_ready()
    outcomes = {solve(phi) is None for phi in matrix}
    assert outcomes == {True, False}


@settings(max_examples=50, deadline=None)
@given(variables=st.integers(1, 5), clauses=st.integers(2, 4), seed=st.integers(0, 2**32 - 1))
def test_random_instances_cover_every_variable(variables, clauses, seed):
    phi = random_instance(variables, clauses, np.random.default_rng(seed))
    assert phi.unused_variables() == ()
    solution = solve(phi)
    if solution is not None:
        assert check(phi, solution)


def _assignments(n):
    """Every assignment, variable 0 most significant"""
    for bits in product((0, 1), repeat=n):
        yield dict(enumerate(bits))


@settings(max_examples=25, deadline=None)
@given(variables=st.integers(1, 12), clauses=st.integers(1, 5), seed=st.integers(0, 2**32 - 1))
def test_solver_matches_exhaustive_check(variables, clauses, seed):
    phi = random_instance(variables, clauses, np.random.default_rng(seed), cover_all=False)
    first = next((xi for xi in _assignments(variables) if check(phi, xi)), None)
    assert solve(phi) == first


@settings(max_examples=50, deadline=None)
@given(variables=st.integers(1, 6), clauses=st.integers(1, 4), seed=st.integers(0, 2**32 - 1),
       data=st.data())
def test_dropping_a_clause_keeps_every_solution(variables, clauses, seed, data):
    phi = random_instance(variables, clauses, np.random.default_rng(seed), cover_all=False)
    dropped = data.draw(st.integers(0, clauses - 1))
    smaller = WSatInstance(variables, phi.clauses[:dropped] + phi.clauses[dropped + 1:])
    for xi in _assignments(variables):
        if check(phi, xi):
            assert check(smaller, xi)
