"""Oracle sweeps at small sizes"""

import inspect

import pytest

from src.utils.errors import PreconditionError
from src.validation.sweeps import (
    measure_abb_scaling,
    run_scope,
    verify_devices,
    verify_lemma1,
    verify_lifting,
    verify_sc,
    verify_t1,
    verify_t2,
    verify_t3,
    verify_t4,
    verify_theorem6,
)
from src.wsat.instance import instance_matrix


def test_t1_and_t2_sweeps():
    assert verify_t1(max_states=2, random_count=20, seed=1).passed
    assert verify_t2(max_states=2, random_count=20, seed=1).passed


def test_abb_sweep():
    result = verify_theorem6(max_states=3, random_count=20, seed=2)
    assert result.passed
    assert result.summary()["checked"] > 0


def test_lifting_sweep():
    assert verify_lifting(count=30, seed=3).passed


def test_chain_extension_sweep():
    assert verify_lemma1(max_states=2, max_len=2).passed


def test_device_sweep_reports_condition_one():
    result = verify_devices(max_len=5)
    assert result.passed
    assert "aba" in result.notes[0]


def test_gadget_sweeps():
    assert verify_t3(instances=instance_matrix()[:6]).passed
    assert verify_t4(words=("aba",), instances=instance_matrix()[:6]).passed
    assert verify_sc(word="aba", count=2).passed


def test_unknown_scope():
    with pytest.raises(PreconditionError):
        run_scope("t5")


@pytest.mark.parametrize(
    "scope, options",
    [
        ("device", {"seed": 1}),
        ("lemma1", {"random_count": 5}),
        ("t3", {"max_states": 3}),
        ("sc", {"max_states": 3}),
    ],
)
def test_scopes_refuse_options_they_do_not_use(scope, options):
    with pytest.raises(PreconditionError):
        run_scope(scope, **options)


def test_sc_sweep_draws_seeded_instances():
    first = verify_sc(word="aba", count=1, random_count=3, seed=4)
    second = verify_sc(word="aba", count=1, random_count=3, seed=4)
    assert first.passed
    assert first.frame.equals(second.frame)


def test_theorem6_defaults_cover_five_states_and_ten_thousand_samples():
    defaults = inspect.signature(verify_theorem6).parameters
    assert defaults["max_states"].default == 5
    assert defaults["random_count"].default >= 10_000
    sizes = inspect.signature(measure_abb_scaling).parameters["sizes"].default
    assert max(sizes) >= 1000


def test_scaling_fit():
    fit = measure_abb_scaling(sizes=(20, 40), repeats=1)
    assert list(fit["frame"]["states"]) == [20, 40]
    assert isinstance(fit["degree"], float)
