import os
from itertools import chain, product
from pathlib import Path
from typing import Iterable, Iterator

import platformdirs

from .errors import ScenarioNotFound
from .utils import expandvars

ENV_PDSETS_SCENARIO_DIR = os.environ.get("PDSETS_SCENARIO_DIR")
XDG_CONFIG_DIR = expandvars(os.environ.get("XDG_CONFIG_HOME", "~/.config")) / "pdsets"
USER_CONFIG_DIR = platformdirs.user_config_path(appname="pdsets")
BUILTIN_DIR = Path(__file__).parent / "scenarios"


def _search_dirs(include_cwd: bool) -> Iterable[Path]:
    if include_cwd:
        yield Path(".")
    if ENV_PDSETS_SCENARIO_DIR is not None:
        yield expandvars(ENV_PDSETS_SCENARIO_DIR)
    yield XDG_CONFIG_DIR
    yield USER_CONFIG_DIR
    yield BUILTIN_DIR


def find_scenario_by_name(name: str) -> Path:
    stem = Path(name).stem
    filenames = (
        name,
        f"{stem}.yaml",
        f"{stem}.yml",
        f"{name}.yaml",
        f"{name}.yml",
    )
    search_pathes = [
        d / f for d, f in product(_search_dirs(include_cwd=True), filenames)
    ]
    for path in search_pathes:
        if path.is_file():
            return path

    raise ScenarioNotFound(scenario=stem, search_pathes=search_pathes)


def find_scenario(name_or_path: str) -> Path:
    # Maybe we are given the path to a scenario file?
    as_path = expandvars(name_or_path)
    if as_path.is_file():
        return as_path

    # search the default locations for the given name
    return find_scenario_by_name(name=name_or_path)


def list_scenarios() -> Iterator[Path]:
    for loc in _search_dirs(include_cwd=False):
        yield from sorted(chain(loc.glob("*.yml"), loc.glob("*.yaml")))
