from itertools import combinations, product
from random import Random
from typing import ClassVar, Iterator, List, Optional

from pydantic import Field
from pydantic.dataclasses import dataclass

from ..algebra import group_by_name, nary_sumset
from ..masks import all_masks, indices_of
from ..probe import Instance, ProbeConfig
from ..statement import Context
from ..statements import ProjectionSubmodularity, SetMain, SumsetLogSubmodularity
from .common import CONFIG, Trials, non_nested_pairs, pick_groups, random_subset

COVERINGS = ("singletons", "pairs", "leave-one-out", "degree", "lp")


@dataclass(config=CONFIG)
class ProjectionSubmodularityProbe(Trials):
    """
    Point sets Y ⊆ {0,1}^k against every pair s, t of non-nested coordinate sets.
    Exhaustive mode walks all nonempty Y with at most `max_points` points.
    """

    k: int = Field(default=3, ge=2, le=4)
    max_points: int = Field(default=8, ge=1)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="projection-submodularity",
        statement="projection-submodularity",
        exhaustive=True,
    )

    def _cube(self) -> List[List[int]]:
        return [list(p) for p in product((0, 1), repeat=self.k)]

    def sample(self, ctx: Context, rng: Random) -> Instance:
        cube = self._cube()
        chosen = random_subset(rng, range(len(cube)), self.max_points)
        s, t = rng.choice(list(non_nested_pairs(self.k)))
        Y = [cube[i] for i in chosen]
        return Instance(None, ProjectionSubmodularity(Y=Y, s=s, t=t))

    def enumerate(self, ctx: Context) -> Iterator[Instance]:
        cube = self._cube()
        pairs = list(non_nested_pairs(self.k))
        for size in range(1, min(self.max_points, len(cube)) + 1):
            for points in combinations(cube, size):
                for s, t in pairs:
                    yield Instance(
                        None, ProjectionSubmodularity(Y=list(points), s=s, t=t)
                    )


@dataclass(config=CONFIG)
class SetMainProbe(Trials):
    """Sums in abelian catalog groups, k <= 4, against a random covering."""

    structures: Optional[List[str]] = None
    max_order: int = Field(default=12, ge=1)
    max_k: int = Field(default=4, ge=2, le=6)
    max_size: int = Field(default=5, ge=1)
    coverings: List[str] = Field(default_factory=lambda: list(COVERINGS))

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="set-main", statement="set-main", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G = rng.choice(pick_groups(self.structures, ctx, self.max_order, abelian=True))
        k = rng.randint(2, self.max_k)
        ground = [random_subset(rng, G.elements, self.max_size) for _ in range(k)]
        kind = rng.choice(self.coverings)
        if kind in ("singletons", "pairs", "leave-one-out"):
            covering = {"family": kind, "weights": "regular"}
        else:
            # singletons keep every index covered
            members = [[i] for i in range(1, k + 1)]
            members += [list(indices_of(m)) for m in all_masks(k) if rng.random() < 0.3]
            covering = {"family": members, "weights": kind}
        return Instance(G, SetMain(ground=ground, covering=covering))


@dataclass(config=CONFIG)
class SumsetLogSubmodularityProbe(Trials):
    """Three sets in a group with the sums restricted to a random part of the image."""

    structure: str = "Z9"
    max_size: int = Field(default=3, ge=1)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="sumset-log-submodularity",
        statement="sumset-log-submodularity",
        exhaustive=False,
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G = group_by_name(self.structure)
        sets = [random_subset(rng, G.elements, self.max_size) for _ in range(3)]
        image = sorted(nary_sumset(G, *sets))
        Y = random_subset(rng, image)
        statement = SumsetLogSubmodularity(sets=sets, s=0b011, t=0b110, Y=Y)
        return Instance(G, statement)
