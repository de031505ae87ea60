from fractions import Fraction
from itertools import combinations, product
from random import Random
from typing import ClassVar, Dict, Iterator, List

from pydantic import Field
from pydantic.dataclasses import dataclass

from ..entropy import JointDistribution, random_joint_distribution, random_marginal
from ..masks import all_masks
from ..probe import Instance, ProbeConfig
from ..statement import Context
from ..statements import EntropyQuadruple, EntropySubmodularity, PairwiseConditional
from ..utils import format_rational
from .common import CONFIG, Trials, pick_groups, random_subset


def _atom_key(x) -> str:
    return " ".join(str(a) for a in x)


def distribution_value(dist: JointDistribution) -> Dict:
    """The scenario form of a joint law, as accepted by ``distribution:`` fields."""
    return {
        "pmf": {_atom_key(x): format_rational(p) for x, p in dist.pmf.items()},
        "supports": [list(s) for s in dist.supports],
    }


@dataclass(config=CONFIG)
class EntropySubmodularityProbe(Trials):
    """Sums of independent variables with random marginals on random supports."""

    structures: List[str] = Field(default_factory=lambda: ["Z5", "Z6", "Z2xZ2"])
    k: int = Field(default=3, ge=2, le=4)
    max_size: int = Field(default=3, ge=1)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="entropy-submodularity", statement="entropy-submodularity", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G = rng.choice(pick_groups(self.structures, ctx, max_order=0, abelian=True))
        ground = [random_subset(rng, G.elements, self.max_size) for _ in range(self.k)]
        marginals = [
            {a: format_rational(p) for a, p in random_marginal(rng, X).items()}
            for X in ground
        ]
        masks = list(all_masks(self.k))
        s, t = rng.choice(masks), rng.choice(masks)
        statement = EntropySubmodularity(ground=ground, s=s, t=t, marginals=marginals)
        return Instance(G, statement)


@dataclass(config=CONFIG)
class EntropyQuadrupleProbe(Trials):
    """
    Joint laws of four binary variables. Exhaustive mode walks the uniform laws on
    every support of at most `max_support` atoms; random mode draws dependent laws.
    """

    max_support: int = Field(default=4, ge=1, le=16)
    sparsity: float = Field(default=0.5, ge=0, lt=1)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="entropy-quadruple", statement="entropy-quadruple", exhaustive=True
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        dist = random_joint_distribution(rng, [[0, 1]] * 4, self.sparsity)
        return Instance(None, EntropyQuadruple(distribution=distribution_value(dist)))

    def enumerate(self, ctx: Context) -> Iterator[Instance]:
        atoms = list(product((0, 1), repeat=4))
        for size in range(1, self.max_support + 1):
            p = format_rational(Fraction(1, size))
            for support in combinations(atoms, size):
                distribution = {
                    "pmf": {_atom_key(x): p for x in support},
                    "supports": [[0, 1]] * 4,
                }
                yield Instance(None, EntropyQuadruple(distribution=distribution))


@dataclass(config=CONFIG)
class PairwiseConditionalProbe(Trials):
    """Dependent joint laws of k variables on supports of 2 or 3 values."""

    max_k: int = Field(default=4, ge=2, le=5)
    min_k: int = Field(default=3, ge=2)
    sparsity: float = Field(default=0.3, ge=0, lt=1)
    max_support: int = Field(default=3, ge=2)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="pairwise-conditional", statement="pairwise-conditional", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        k = rng.randint(min(self.min_k, self.max_k), self.max_k)
        supports = [list(range(rng.randint(2, self.max_support))) for _ in range(k)]
        dist = random_joint_distribution(rng, supports, self.sparsity)
        return Instance(None, PairwiseConditional(distribution=distribution_value(dist)))
