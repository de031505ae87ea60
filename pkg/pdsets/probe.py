from __future__ import annotations

from random import Random
from typing import (
    TYPE_CHECKING,
    Iterator,
    NamedTuple,
    Optional,
    Protocol,
    runtime_checkable,
)

if TYPE_CHECKING:
    from .statement import Context, Statement, Structure


class ProbeConfig(NamedTuple):
    name: str
    # the statement id every instance is checked against
    statement: str
    # whether the probe can walk its whole instance space
    exhaustive: bool


class Instance(NamedTuple):
    structure: Optional[Structure]
    statement: Statement


@runtime_checkable
class HasProbeConfig(Protocol):
    probe_config: ProbeConfig


class HasProbeInstances(Protocol):
    trials: int
    exhaustive: bool

    def sample(self, ctx: Context, rng: Random) -> Instance: ...  # pragma: no cover

    def enumerate(self, ctx: Context) -> Iterator[Instance]: ...  # pragma: no cover


@runtime_checkable
class Probe(HasProbeInstances, HasProbeConfig, Protocol):
    def __init__(self, *args, **kwargs) -> None:
        # allow any amount of args / kwargs for BaseModel and dataclasses.
        ...  # pragma: no cover
