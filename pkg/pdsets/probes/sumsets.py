from fractions import Fraction
from itertools import combinations, product
from random import Random
from typing import ClassVar, Iterator, List, Optional

from pydantic import Field
from pydantic.dataclasses import dataclass

from ..algebra import group_by_name, nary_sumset
from ..probe import Instance, ProbeConfig
from ..statement import Context
from ..statements import (
    AbelianSumset,
    GmrLeaveOneOut,
    GmrSingletons,
    NaivePairwise,
    Nonabelian,
    RuzsaQuadruple,
    WeightedNonabelian,
)
from ..utils import format_rational
from .common import CONFIG, Trials, pick_groups, random_subset, small_subsets

WEIGHT_CHOICES = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2))


@dataclass(config=CONFIG)
class NaivePairwiseProbe(Trials):
    """
    |X_1 + ... + X_k|^{k-1} <= Π |X_i + X_j| over small subsets of one group.
    Exhaustive mode walks every k-tuple of subsets with at most `max_size` elements.
    """

    structure: str = "D3"
    k: int = Field(default=3, ge=2, le=4)
    max_size: int = Field(default=2, ge=1)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="naive-pairwise", statement="naive-pairwise", exhaustive=True
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G = group_by_name(self.structure)
        sets = [random_subset(rng, G.elements, self.max_size) for _ in range(self.k)]
        return Instance(G, NaivePairwise(sets=sets))

    def enumerate(self, ctx: Context) -> Iterator[Instance]:
        G = group_by_name(self.structure)
        subsets = [list(s) for s in small_subsets(G.elements, self.max_size)]
        for sets in product(subsets, repeat=self.k):
            yield Instance(G, NaivePairwise(sets=list(sets)))


@dataclass(config=CONFIG)
class NonabelianProbe(Trials):
    structures: Optional[List[str]] = None
    max_order: int = Field(default=12, ge=1)
    abelian: Optional[bool] = False
    max_k: int = Field(default=4, ge=2, le=5)
    max_size: int = Field(default=3, ge=1)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="nonabelian", statement="nonabelian", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G = rng.choice(pick_groups(self.structures, ctx, self.max_order, self.abelian))
        k = rng.randint(2, self.max_k)
        sets = [random_subset(rng, G.elements, self.max_size) for _ in range(k)]
        return Instance(G, Nonabelian(sets=sets))


@dataclass(config=CONFIG)
class RuzsaQuadrupleProbe(Trials):
    """
    Margins of the four-set product bound on small non-abelian groups. The bound is
    an open question; the probe reports what it sees.
    """

    trials: int = Field(default=10_000, ge=1)
    structures: List[str] = Field(default_factory=lambda: ["D4", "Q8", "D5"])
    max_size: int = Field(default=4, ge=1)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="ruzsa-quadruple", statement="ruzsa-quadruple", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G = group_by_name(rng.choice(self.structures))
        S, T, U, V = (random_subset(rng, G.elements, self.max_size) for _ in range(4))
        return Instance(G, RuzsaQuadruple(S=S, T=T, U=U, V=V))


@dataclass(config=CONFIG)
class _AbelianSumsetTrials(Trials):
    structures: Optional[List[str]] = None
    max_order: int = Field(default=12, ge=1)
    max_k: int = Field(default=3, ge=2, le=4)
    max_size: int = Field(default=4, ge=1)

    def draw(self, ctx: Context, rng: Random):
        G = rng.choice(pick_groups(self.structures, ctx, self.max_order, abelian=True))
        k = rng.randint(2, self.max_k)
        A = random_subset(rng, G.elements, self.max_size)
        B = [random_subset(rng, G.elements, self.max_size) for _ in range(k)]
        D = random_subset(rng, sorted(nary_sumset(G, *B)), self.max_size)
        return G, A, B, D


@dataclass(config=CONFIG)
class AbelianSumsetProbe(_AbelianSumsetTrials):
    families: List[str] = Field(
        default_factory=lambda: ["singletons", "pairs", "leave-one-out"]
    )

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="abelian-sumset", statement="abelian-sumset", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G, A, B, D = self.draw(ctx, rng)
        covering = {"family": rng.choice(self.families), "weights": "regular"}
        return Instance(G, AbelianSumset(A=A, B=B, D=D, covering=covering))


@dataclass(config=CONFIG)
class GmrSingletonsProbe(_AbelianSumsetTrials):
    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="gmr-singletons", statement="gmr-singletons", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G, A, B, D = self.draw(ctx, rng)
        return Instance(G, GmrSingletons(A=A, B=B, D=D))


@dataclass(config=CONFIG)
class GmrLeaveOneOutProbe(_AbelianSumsetTrials):
    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="gmr-leave-one-out", statement="gmr-leave-one-out", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G, A, B, D = self.draw(ctx, rng)
        return Instance(G, GmrLeaveOneOut(A=A, B=B, D=D))


@dataclass(config=CONFIG)
class WeightedNonabelianProbe(Trials):
    """Random pair weights from {0, 1/2, 1, 3/2, 2}; nothing is claimed."""

    structures: Optional[List[str]] = None
    max_order: int = Field(default=10, ge=1)
    k: int = Field(default=3, ge=2, le=4)
    max_size: int = Field(default=3, ge=1)

    probe_config: ClassVar[ProbeConfig] = ProbeConfig(
        name="weighted-nonabelian", statement="weighted-nonabelian", exhaustive=False
    )

    def sample(self, ctx: Context, rng: Random) -> Instance:
        G = rng.choice(pick_groups(self.structures, ctx, self.max_order, abelian=False))
        sets = [random_subset(rng, G.elements, self.max_size) for _ in range(self.k)]
        weights = {
            f"{i},{j}": format_rational(rng.choice(WEIGHT_CHOICES))
            for i, j in combinations(range(1, self.k + 1), 2)
        }
        if all(w == "0" for w in weights.values()):
            weights["1,2"] = "1"
        return Instance(G, WeightedNonabelian(sets=sets, weights=weights))
