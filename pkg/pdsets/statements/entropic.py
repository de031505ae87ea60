from typing import ClassVar, List, Optional, Union

from pydantic import ConfigDict, Field
from pydantic.dataclasses import dataclass

from ..errors import InvalidChain
from ..hypergraph import dominates, minimal_multiset
from ..inequalities import (
    check_compression_entropy,
    check_data_processing,
    check_entropy_counterexample_4sets,
    check_entropy_quadruple,
    check_entropy_submodularity,
    check_entropy_upper_bound,
    check_mutual_information_identity,
    check_pairwise_conditional,
    check_uniformizing,
)
from ..logger import logger
from ..statement import Context, StatementConfig
from ..validators import (
    Covering,
    Distribution,
    ElementList,
    Marginals,
    Mask,
    build_family,
)
from ..verdict import Verdict
from .common import (
    FunctionKind,
    build_function,
    build_ground,
    build_marginals,
    image_values,
)

CONFIG = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


@dataclass(config=CONFIG)
class EntropySubmodularity:
    """
    H(f_{s∪t}) + H(f_{s∩t}) <= H(f_s) + H(f_t) for strongly partition-determined f
    and independent Z_i.
    """

    ground: List[ElementList]
    s: Mask
    t: Mask
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None
    marginals: Marginals = "uniform"
    check_hypothesis: bool = True

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="entropy-submodularity", exact=False, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        ground = build_ground(ctx, self.ground)
        f = build_function(ctx, self.function, ground, self.coeffs)
        marginals = build_marginals(ctx, self.marginals, ground)
        return check_entropy_submodularity(
            f, marginals, self.s, self.t, ctx.budget, self.check_hypothesis
        )


@dataclass(config=CONFIG)
class CompressionEntropy:
    """
    Σ_{s∈A} H(f_s) >= Σ_{s∈B} H(f_s) whenever B is reached from A by elementary
    compressions. B defaults to the minimal multiset of A.
    """

    ground: List[ElementList]
    family: Union[str, List[List[int]]]
    target: Union[str, List[List[int]], None] = None
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None
    marginals: Marginals = "uniform"

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="compression-entropy", exact=False, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        ground = build_ground(ctx, self.ground)
        f = build_function(ctx, self.function, ground, self.coeffs)
        marginals = build_marginals(ctx, self.marginals, ground)
        A = build_family(self.family, ground.k)
        B = minimal_multiset(A) if self.target is None else build_family(self.target, ground.k)
        found = dominates(A, B)
        if found.status != "yes":
            logger.info("No compression sequence from %s to %s (%s)", A, B, found.status)
            raise InvalidChain(f"{B} is not reached from {A} by compressions ({found.status})")
        return check_compression_entropy(f, marginals, A, B, found.steps, ctx.budget)


@dataclass(config=CONFIG)
class EntropyUpperBound:
    """H(f(Z)) <= Σ α_s H(f_s(Z_s)) for partition-determined f."""

    ground: List[ElementList]
    covering: Covering
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None
    marginals: Marginals = "uniform"

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="entropy-upper-bound", exact=False, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        ground = build_ground(ctx, self.ground)
        f = build_function(ctx, self.function, ground, self.coeffs)
        marginals = build_marginals(ctx, self.marginals, ground)
        covering = self.covering.build(ground.k)
        return check_entropy_upper_bound(f, marginals, covering, ctx.budget)


@dataclass(config=CONFIG)
class Entropy4Sets:
    """The four-variable law with Z2 = Z3 uniform and Z1 = Z4 constant."""

    m: int = Field(default=2, ge=1)
    degenerate: bool = False

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="entropy-4sets", exact=False, needs="none"
    )

    def check(self, ctx: Context) -> Verdict:
        return check_entropy_counterexample_4sets(self.m, self.degenerate)


@dataclass(config=CONFIG)
class EntropyQuadruple:
    distribution: Distribution

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="entropy-quadruple", exact=False, needs="none"
    )

    def check(self, ctx: Context) -> Verdict:
        return check_entropy_quadruple(self.distribution.build())


@dataclass(config=CONFIG)
class PairwiseConditional:
    """(k-1) H(Z) <= Σ_{i<j} H(Z_i, Z_j | rest) for any joint law."""

    distribution: Distribution

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="pairwise-conditional", exact=False, needs="none"
    )

    def check(self, ctx: Context) -> Verdict:
        return check_pairwise_conditional(self.distribution.build())


@dataclass(config=CONFIG)
class MutualInformation:
    ground: List[ElementList]
    s: Mask
    t: Mask
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None
    marginals: Marginals = "uniform"

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="mutual-information", exact=False, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        ground = build_ground(ctx, self.ground)
        f = build_function(ctx, self.function, ground, self.coeffs)
        marginals = build_marginals(ctx, self.marginals, ground)
        return check_mutual_information_identity(
            f, marginals, self.s, self.t, ctx.budget
        )


@dataclass(config=CONFIG)
class DataProcessing:
    """I(f_A(Z_A); Z_B) <= I(Z_A; Z_B), the function acting on the law's supports."""

    distribution: Distribution
    A: Mask
    B: Mask
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="data-processing", exact=False, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        dist = self.distribution.build()
        ground = dist.ground()
        if ctx.structure is not None:
            ground.check_elements(ctx.structure.order)
        f = build_function(ctx, self.function, ground, self.coeffs)
        return check_data_processing(dist, f, self.A, self.B)


@dataclass(config=CONFIG)
class UniformizingJoint:
    ground: List[ElementList]
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None
    Y: Optional[ElementList] = None

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="uniformizing-joint", exact=True, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        ground = build_ground(ctx, self.ground)
        f = build_function(ctx, self.function, ground, self.coeffs)
        return check_uniformizing(f, image_values(ctx, self.function, self.Y))
