from typing import ClassVar, List, Optional

from pydantic import ConfigDict, Field
from pydantic.dataclasses import dataclass

from ..inequalities import (
    check_full_compound,
    check_log_submodularity,
    check_projection_bound,
    check_projection_submodularity,
    check_set_main,
    sumset_log_submodularity_probe,
)
from ..pdfunc import compound_image
from ..statement import Context, StatementConfig
from ..validators import Covering, CoveringSpec, ElementList, Mask
from ..verdict import Verdict
from .common import FunctionKind, build_function, build_ground, image_values

CONFIG = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


@dataclass(config=CONFIG)
class SetMain:
    """
    |Y| <= Π |f_s(f⁻¹(Y))|^{α_s}. Y defaults to the whole image f(X_[k]).
    """

    ground: List[ElementList]
    covering: Covering
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None
    Y: Optional[ElementList] = None

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="set-main", exact=True, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        ground = build_ground(ctx, self.ground)
        f = build_function(ctx, self.function, ground, self.coeffs)
        covering = self.covering.build(ground.k)
        Y = image_values(ctx, self.function, self.Y)
        if Y is None:
            Y = list(compound_image(f, ground.full, ctx.budget))
        return check_set_main(f, Y, covering, ctx.budget)


@dataclass(config=CONFIG)
class FullCompound:
    ground: List[ElementList]
    covering: Covering
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="full-compound", exact=True, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        ground = build_ground(ctx, self.ground)
        f = build_function(ctx, self.function, ground, self.coeffs)
        return check_full_compound(f, self.covering.build(ground.k), ctx.budget)


@dataclass(config=CONFIG)
class ProjectionBound:
    """|Y| <= Π |π_s(Y)|^{α_s} for a set of points Y."""

    Y: List[List[int]] = Field(..., min_length=1)
    covering: Covering = Field(default_factory=lambda: CoveringSpec(family="singletons"))

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="projection-bound", exact=True, needs="none"
    )

    def check(self, ctx: Context) -> Verdict:
        k = len(self.Y[0])
        return check_projection_bound(self.Y, self.covering.build(k))


@dataclass(config=CONFIG)
class ProjectionSubmodularity:
    Y: List[List[int]] = Field(..., min_length=1)
    s: Mask = 0b011
    t: Mask = 0b110

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="projection-submodularity", exact=True, needs="none"
    )

    def check(self, ctx: Context) -> Verdict:
        return check_projection_submodularity(self.Y, self.s, self.t)


@dataclass(config=CONFIG)
class LogSubmodularity:
    """|f_{s∪t}(P)| |f_{s∩t}(P)| <= |f_s(P)| |f_t(P)|, P = f⁻¹(Y). Fails in general."""

    ground: List[ElementList]
    s: Mask
    t: Mask
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None
    Y: Optional[ElementList] = None

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="log-submodularity", exact=True, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        ground = build_ground(ctx, self.ground)
        f = build_function(ctx, self.function, ground, self.coeffs)
        Y = image_values(ctx, self.function, self.Y)
        return check_log_submodularity(f, self.s, self.t, Y, ctx.budget)


@dataclass(config=CONFIG)
class SumsetLogSubmodularity:
    sets: List[ElementList]
    s: Mask
    t: Mask
    Y: Optional[ElementList] = None

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="sumset-log-submodularity", exact=True, needs="group"
    )

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        sets = [ctx.elements(x) for x in self.sets]
        Y = None if self.Y is None else ctx.elements(self.Y)
        return sumset_log_submodularity_probe(G, sets, self.s, self.t, Y, ctx.budget)
