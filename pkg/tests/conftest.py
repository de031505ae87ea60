from pathlib import Path
from random import Random

import pytest

from pdsets.algebra import FiniteGroup, cyclic_group, dihedral_group
from pdsets.output import SavingOutput

PDSETS_DIR = Path(__file__).parent.parent


@pytest.fixture()
def testoutput() -> SavingOutput:
    return SavingOutput()


@pytest.fixture()
def d3() -> FiniteGroup:
    return dihedral_group(3)


@pytest.fixture()
def z5() -> FiniteGroup:
    return cyclic_group(5)


@pytest.fixture()
def rng() -> Random:
    return Random(0)


def write_scenario(path: Path, text: str, name: str = "scenario.yaml") -> Path:
    """Writes a scenario file and returns its path."""
    path.mkdir(parents=True, exist_ok=True)
    result = path / name
    result.write_text(text, encoding="utf-8")
    return result
