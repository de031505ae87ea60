from typing import ClassVar, Dict, List, Optional

from pydantic import ConfigDict, Field
from pydantic.dataclasses import dataclass

from ..inequalities import (
    check_factorized,
    check_polynomial_compound,
    check_sum_of_squares,
)
from ..inequalities.rings import sections_function
from ..masks import parse_mask
from ..pdfunc import GroundFamily
from ..statement import Context, StatementConfig
from ..validators import Covering, CoveringSpec, ElementList
from ..verdict import Verdict
from .common import build_function

CONFIG = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


@dataclass(config=CONFIG)
class PolynomialCompound:
    """
    |F(X)| <= Π |f_s(π_s(g(X)))|^{α_s} where F = f(g_1, ..., g_m) pointwise.

    f is either the ring product of the y's (``f: product``) or given section by
    section as expressions in y1..ym (``sections: {"{1,2}": "y1*y2"}``); masks without
    an expression map to their coordinate tuple.
    """

    F: str
    g: List[str] = Field(..., min_length=1)
    ground: List[ElementList] = Field(..., min_length=1)
    covering: Covering = Field(default_factory=lambda: CoveringSpec(family="singletons"))
    sections: Optional[Dict[str, str]] = None
    f: Optional[str] = None

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="polynomial-compound", exact=True, needs="ring"
    )

    def check(self, ctx: Context) -> Verdict:
        R = ctx.ring(self.statement_config.name)
        m = len(self.g)
        if (self.sections is None) == (self.f is None):
            raise ValueError('Give exactly one of "sections" and "f: product"')
        if self.f is not None:
            if self.f != "product":
                raise ValueError(f'Unknown f "{self.f}", only "product" is built in')
            y_ground = GroundFamily.of(*([R.elements] * m))
            pd = build_function(ctx, "product", y_ground)
        else:
            pd = sections_function(
                R, {parse_mask(k): v for k, v in self.sections.items()}, m  # type: ignore
            )
        return check_polynomial_compound(
            R,
            pd,
            self.g,
            self.F,
            self.covering.build(m),
            [ctx.elements(x) for x in self.ground],
            ctx.budget,
        )


@dataclass(config=CONFIG)
class Factorized:
    """F = g_1 g_2 ... g_m split by the ring product."""

    factors: List[str] = Field(..., min_length=1)
    ground: List[ElementList] = Field(..., min_length=1)
    covering: Covering = Field(default_factory=lambda: CoveringSpec(family="singletons"))

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="factorized", exact=True, needs="ring"
    )

    def check(self, ctx: Context) -> Verdict:
        R = ctx.ring(self.statement_config.name)
        return check_factorized(
            R,
            self.factors,
            self.covering.build(len(self.factors)),
            [ctx.elements(x) for x in self.ground],
            ctx.budget,
        )


@dataclass(config=CONFIG)
class SumOfSquares:
    """|A² ⊕ B²| <= |(A ⊕ B)²| · |A·B ⊕ B·A| with bound operations."""

    A: ElementList
    B: ElementList

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="sum-of-squares", exact=True, needs="ring"
    )

    def check(self, ctx: Context) -> Verdict:
        R = ctx.ring(self.statement_config.name)
        return check_sum_of_squares(
            R, ctx.elements(self.A), ctx.elements(self.B), ctx.budget
        )
