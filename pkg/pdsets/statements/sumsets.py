from fractions import Fraction
from typing import ClassVar, Dict, List, Tuple, Union

from pydantic import ConfigDict, Field, field_validator
from pydantic.dataclasses import dataclass

from ..inequalities import (
    check_abelian_sumset,
    check_naive_pairwise,
    check_nonabelian,
    check_regular_abelian,
    check_ruzsa_quadruple,
    check_ruzsa_triple,
    gmr_leave_one_out,
    gmr_singletons,
    probe_weighted_nonabelian,
)
from ..statement import Context, StatementConfig
from ..validators import Covering, ElementList, Rational, build_family
from ..verdict import Verdict

CONFIG = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


@dataclass(config=CONFIG)
class AbelianSumset:
    """|A + D|^c <= |D|^{c-1} Π |A + B⁺_s|^{α_s} for a fractional partition, D ⊆ B⁺."""

    A: ElementList
    B: List[ElementList]
    D: ElementList
    covering: Covering

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="abelian-sumset", exact=True, needs="group"
    )

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        B = [ctx.elements(b) for b in self.B]
        return check_abelian_sumset(
            G,
            ctx.elements(self.A),
            B,
            ctx.elements(self.D),
            self.covering.build(len(B)),
        )


@dataclass(config=CONFIG)
class RegularAbelian:
    A: ElementList
    B: List[ElementList]
    D: ElementList
    family: Union[str, List[List[int]]]

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="regular-abelian", exact=True, needs="group"
    )

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        B = [ctx.elements(b) for b in self.B]
        family = build_family(self.family, len(B))
        return check_regular_abelian(
            G, ctx.elements(self.A), B, ctx.elements(self.D), family
        )


@dataclass(config=CONFIG)
class GmrSingletons:
    A: ElementList
    B: List[ElementList]
    D: ElementList

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="gmr-singletons", exact=True, needs="group"
    )

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        B = [ctx.elements(b) for b in self.B]
        return gmr_singletons(G, ctx.elements(self.A), B, ctx.elements(self.D))


@dataclass(config=CONFIG)
class GmrLeaveOneOut:
    A: ElementList
    B: List[ElementList]
    D: ElementList

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="gmr-leave-one-out", exact=True, needs="group"
    )

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        B = [ctx.elements(b) for b in self.B]
        return gmr_leave_one_out(G, ctx.elements(self.A), B, ctx.elements(self.D))


@dataclass(config=CONFIG)
class Nonabelian:
    """|X_1 + ... + X_k|^2 <= Π_{i<j} A(i,j)^{2/(k-1)}, A(i,j) maximized over middles."""

    sets: List[ElementList] = Field(..., min_length=2)

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="nonabelian", exact=True, needs="group"
    )

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        return check_nonabelian(G, [ctx.elements(x) for x in self.sets], ctx.budget)


@dataclass(config=CONFIG)
class RuzsaTriple:
    S: ElementList
    T: ElementList
    U: ElementList

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="ruzsa-triple", exact=True, needs="group"
    )

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        S, T, U = (ctx.elements(x) for x in (self.S, self.T, self.U))
        return check_ruzsa_triple(G, S, T, U, ctx.budget)


@dataclass(config=CONFIG)
class NaivePairwise:
    """|X_1 + ... + X_k|^{k-1} <= Π_{i<j} |X_i + X_j|, false in non-abelian groups."""

    sets: List[ElementList] = Field(..., min_length=2)

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="naive-pairwise", exact=True, needs="group"
    )

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        return check_naive_pairwise(G, [ctx.elements(x) for x in self.sets])


@dataclass(config=CONFIG)
class RuzsaQuadruple:
    S: ElementList
    T: ElementList
    U: ElementList
    V: ElementList

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="ruzsa-quadruple", exact=True, needs="group"
    )

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        S, T, U, V = (ctx.elements(x) for x in (self.S, self.T, self.U, self.V))
        return check_ruzsa_quadruple(G, S, T, U, V, ctx.budget)


def parse_pair(text: str) -> Tuple[int, int]:
    """
    >>> parse_pair("1,3"), parse_pair("{2 4}")
    ((1, 3), (2, 4))
    """
    parts = text.strip().strip("{}()").replace(",", " ").split()
    if len(parts) != 2:
        raise ValueError(f'A weight key needs two indices "i,j", got "{text}"')
    i, j = (int(p) for p in parts)
    return (i, j)


@dataclass(config=CONFIG)
class WeightedNonabelian:
    sets: List[ElementList] = Field(..., min_length=2)
    weights: Dict[str, Rational] = Field(default_factory=dict)

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="weighted-nonabelian", exact=True, needs="group"
    )

    @field_validator("weights", mode="before")
    def validate_weights(cls, weights):
        if weights is None:
            return {}
        return {str(key): value for key, value in weights.items()}

    def check(self, ctx: Context) -> Verdict:
        G = ctx.group(self.statement_config.name)
        sets = [ctx.elements(x) for x in self.sets]
        if self.weights:
            weights = {parse_pair(key): w for key, w in self.weights.items()}
        else:
            k = len(sets)
            weights = {
                (i, j): Fraction(1) for i in range(1, k + 1) for j in range(i + 1, k + 1)
            }
        return probe_weighted_nonabelian(G, sets, weights, ctx.budget)
