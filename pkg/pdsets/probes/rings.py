from random import Random
from typing import ClassVar, List

from pydantic import Field
from pydantic.dataclasses import dataclass

from ..algebra import ring_by_name
from ..probe import Instance, ProbeConfig
from ..statement import Context
from ..statements import SumOfSquares
from .common import CONFIG, Trials, random_subset


@dataclass(config=CONFIG)
class SumOfSquaresProbe(Trials):
    structures: List[str] = Field(default_factory=lambda: ["ZZ13", "ZZ12"])
    max_size: int = Field(default=4, ge=1)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="sum-of-squares", statement="sum-of-squares", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        if ctx.structure is not None and not self.structures:
            R = ctx.ring("sum-of-squares")
        else:
            R = ring_by_name(rng.choice(self.structures))
        A = random_subset(rng, R.elements, self.max_size)
        B = random_subset(rng, R.elements, self.max_size)
        return Instance(R, SumOfSquares(A=A, B=B))
