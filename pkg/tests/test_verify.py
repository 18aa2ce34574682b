import random

import pytest

from stonefin.topo import FiniteSpace, enumerate_topologies, random_topology
from stonefin.verify import (
    SUITES,
    SuiteError,
    VerificationReport,
    components_by_specialisation,
    run_suite,
    spaces_up_to,
)


def test_ideal_bijection_defaults_pass():
    rep = run_suite("ideal-bijection")
    assert rep.ok, rep.failed
    assert rep.checks


def test_all_with_no_points_is_vacuous():
    rep = run_suite("all", max_points=0, samples=0)
    assert rep.ok
    assert {k.split("/")[0] for k in rep.checks} <= set(SUITES)


def test_unknown_suite():
    with pytest.raises(SuiteError, match="unknown suite"):
        run_suite("bogus")


def test_malformed_config():
    with pytest.raises(SuiteError):
        run_suite("gelfand", max_points=-1)
    with pytest.raises(SuiteError, match="no option"):
        run_suite("gelfand", colour="red")


@pytest.mark.parametrize("suite", ["orthogonality", "approximation", "tensor-isometry"])
def test_seed_determinism(suite):
    a = run_suite(suite, seed=7, samples=50).to_json()
    b = run_suite(suite, seed=7, samples=50).to_json()
    a.pop("seconds"), b.pop("seconds")
    assert a == b


def test_report_records_failures():
    rep = VerificationReport("x", 0, {})
    rep.record("k", True)
    rep.record("k", False, lambda: "boom")
    assert rep.failed == ["k"] and rep.checks["k"]["failures"] == ["boom"]
    assert rep.to_json()["ok"] is False


def test_component_oracle_agrees():
    rng = random.Random(2)
    spaces = list(enumerate_topologies(4)) + [random_topology(7, rng) for _ in range(30)]
    for x in spaces:
        assert sorted(components_by_specialisation(x)) == sorted(x.component_masks)


def test_spaces_up_to_counts():
    rng = random.Random(0)
    got = list(spaces_up_to(4, rng, samples=10))
    assert len(got) == 1 + 1 + 4 + 29 + 355
    assert all(isinstance(x, FiniteSpace) for x in got)
