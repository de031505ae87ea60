from __future__ import annotations

from typing import Dict, Type

from . import probes, statements
from .probe import Probe
from .statement import Statement

STATEMENTS: Dict[str, Type[Statement]] = dict()
PROBES: Dict[str, Type[Probe]] = dict()


def register_statement(statement: Type[Statement], force: bool = False):
    name = statement.statement_config.name
    if not force and name in STATEMENTS:
        raise ValueError(f'"{name}" is already registered for statement {STATEMENTS[name]}')
    STATEMENTS[name.lower()] = statement


def statement_by_name(name: str) -> Type[Statement]:
    try:
        return STATEMENTS[name.lower()]
    except KeyError as e:
        raise ValueError(f'Unknown statement: "{name}"') from e


def register_probe(probe: Type[Probe], force: bool = False):
    name = probe.probe_config.name
    if not force and name in PROBES:
        raise ValueError(f'"{name}" is already registered for probe {PROBES[name]}')
    PROBES[name.lower()] = probe


def probe_by_name(name: str) -> Type[Probe]:
    try:
        return PROBES[name.lower()]
    except KeyError as e:
        raise ValueError(f'Unknown probe: "{name}"') from e


# Register statements and probes
for _statement in statements.ALL:
    register_statement(_statement)  # type: ignore
for _probe in probes.ALL:
    register_probe(_probe)  # type: ignore
