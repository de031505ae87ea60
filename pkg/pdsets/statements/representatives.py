from typing import ClassVar, List, Optional, Union

from pydantic import ConfigDict
from pydantic.dataclasses import dataclass

from ..pdfunc import compound_image
from ..representatives import (
    RepresentativeSet,
    check_representative_entropy,
    lex_min_representatives,
    verify_section_injectivity,
)
from ..statement import Context, StatementConfig
from ..validators import ElementList, build_family
from ..verdict import Verdict
from .common import FunctionKind, build_function, build_ground, image_values

CONFIG = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


@dataclass(config=CONFIG)
class _Representatives:
    ground: List[ElementList]
    family: Union[str, List[List[int]]] = "singletons"
    function: FunctionKind = "sum"
    coeffs: Optional[List[int]] = None
    Y: Optional[ElementList] = None
    # one permutation of X_i per coordinate, defaults to index order
    orders: Optional[List[ElementList]] = None

    def representatives(self, ctx: Context):
        ground = build_ground(ctx, self.ground)
        f = build_function(ctx, self.function, ground, self.coeffs)
        family = build_family(self.family, ground.k)
        Y = image_values(ctx, self.function, self.Y)
        if Y is None:
            Y = list(compound_image(f, ground.full, ctx.budget))
        orders = None if self.orders is None else [ctx.elements(o) for o in self.orders]
        reps: RepresentativeSet = lex_min_representatives(f, Y, orders, ctx.budget)
        return f, family, reps


@dataclass(config=CONFIG)
class SectionInjectivity(_Representatives):
    """f_s is one-to-one on π_s(R) for every s in the family."""

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="section-injectivity", exact=True, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        f, family, reps = self.representatives(ctx)
        return verify_section_injectivity(f, family.members, reps)


@dataclass(config=CONFIG)
class RepresentativeEntropy(_Representatives):
    """H(Z_s | f_s(Z_s)) = 0 exactly for Z uniform on the representatives."""

    statement_config: ClassVar[StatementConfig] = StatementConfig(
        name="representative-entropy", exact=True, needs="any"
    )

    def check(self, ctx: Context) -> Verdict:
        f, family, reps = self.representatives(ctx)
        return check_representative_entropy(f, family.members, reps)
