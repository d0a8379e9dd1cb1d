import pytest

from kmlie.report import emit_report
from kmlie.scenarios import UnknownScenario, a3_generated_dimension, get_scenario, run_scenario, scenario_names

NAMES = ["a3tilde-euclidean", "a3tilde-lorentzian", "k-affine-an", "e8-classical", "e9-derived", "e10-chi",
         "herscovich", "spinrep", "heisenberg"]


def test_catalog():
    assert scenario_names() == NAMES
    with pytest.raises(UnknownScenario):
        get_scenario("e11")


@pytest.mark.parametrize("name", NAMES)
def test_scenario_passes(name):
    rep = run_scenario(name)
    assert rep.claims and rep.scenario == name
    assert rep.passed, [c.description for c in rep.claims if not c.passed]
    assert all(c.anchor for c in rep.claims)


def test_parallel_output_is_identical():
    assert emit_report(run_scenario("spinrep", jobs=2)) == emit_report(run_scenario("spinrep"))


def test_small_cutoff():
    assert run_scenario("herscovich", cutoff=3).passed


def test_a3_generation():
    assert a3_generated_dimension() == 15
