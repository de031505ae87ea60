import pytest
from conftest import write_scenario

from pdsets import ScenarioNotFound
from pdsets.find_scenario import find_scenario, list_scenarios


def test_builtin_scenarios():
    names = {path.stem for path in list_scenarios()}
    assert {"abelian", "dihedral", "entropy", "projection", "rings"} <= names
    assert find_scenario("dihedral").name == "dihedral.yaml"


def test_explicit_path(tmp_path):
    path = write_scenario(tmp_path, "structure: Z5\n", name="mine.yaml")
    assert find_scenario(str(path)) == path


def test_not_found():
    with pytest.raises(ScenarioNotFound):
        find_scenario("this-scenario-does-not-exist")
