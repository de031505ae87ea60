"""
Building blocks shared by the statement classes: ground sets, built-in functions,
marginals and image values from their scenario form.
"""

from fractions import Fraction
from typing import Dict, Iterable, List, Literal, Mapping, Optional, Sequence, Union

from ..algebra import FiniteRing
from ..entropy import uniform_on
from ..pdfunc import (
    GroundFamily,
    GroupElem,
    PDFunction,
    RingElem,
    Value,
    builtin_abelian_linear,
    builtin_cartesian,
    builtin_collapsing,
    builtin_interval_g,
    builtin_ordered_product,
    builtin_projection,
    builtin_ring_product,
)
from ..statement import Context
from ..validators import Element

FunctionKind = Literal[
    "sum",
    "linear",
    "projection",
    "cartesian",
    "product",
    "ordered-sum",
    "interval",
    "collapsing",
]

# functions whose values are elements of the structure
GROUP_VALUED = ("sum", "linear", "ordered-sum")
RING_VALUED = ("product",)


def build_ground(ctx: Context, sets: Sequence[Iterable[Element]]) -> GroundFamily:
    if not sets:
        raise ValueError("No ground sets given")
    ground = GroundFamily.of(*(ctx.elements(s) for s in sets))
    if ctx.structure is not None:
        ground.check_elements(ctx.structure.order)
    return ground


def build_function(
    ctx: Context,
    kind: FunctionKind,
    ground: GroundFamily,
    coeffs: Optional[Sequence[int]] = None,
) -> PDFunction:
    if coeffs is not None and kind != "linear":
        raise ValueError(f'Coefficients are only used by "linear", not "{kind}"')
    f: PDFunction
    if kind == "sum":
        f = builtin_abelian_linear(ctx.group(kind), ground)
    elif kind == "linear":
        f = builtin_abelian_linear(ctx.group(kind), ground, coeffs)
    elif kind == "projection":
        f = builtin_projection(ground)
    elif kind == "cartesian":
        f = builtin_cartesian(ground)
    elif kind == "product":
        f = builtin_ring_product(ctx.ring(kind), ground)
    elif kind == "ordered-sum":
        f = builtin_ordered_product(ctx.group(kind), ground)
    elif kind == "interval":
        f = builtin_interval_g(ctx.group(kind), ground)
    elif kind == "collapsing":
        f = builtin_collapsing(ground)
    else:
        raise ValueError(f'Unknown function "{kind}"')
    return f if ctx.memoize else f.unmemoized()


def build_marginals(
    ctx: Context,
    marginals: Union[str, List[Dict[Element, Fraction]]],
    ground: GroundFamily,
) -> List[Mapping[int, Fraction]]:
    """``uniform`` or one ``{element: mass}`` mapping per ground set."""
    if isinstance(marginals, str):
        return [uniform_on(s) for s in ground.sets]
    if len(marginals) != ground.k:
        raise ValueError(f"{len(marginals)} marginals for {ground.k} ground sets")
    result = []
    for i, (m, support) in enumerate(zip(marginals, ground.sets), start=1):
        resolved = {ctx.element(a): p for a, p in m.items()}
        outside = set(resolved) - set(support)
        if outside:
            raise ValueError(f"Marginal of Z_{i} has mass outside X_{i}: {outside}")
        result.append({a: p for a, p in resolved.items() if p != 0})
    return result


def image_values(
    ctx: Context, kind: FunctionKind, items: Optional[Iterable[Element]]
) -> Optional[List[Value]]:
    """Y given as structure elements, for functions valued in the structure."""
    if items is None:
        return None
    ids = ctx.elements(items)
    if kind in GROUP_VALUED:
        return [GroupElem(a) for a in ids]
    if kind in RING_VALUED and isinstance(ctx.structure, FiniteRing):
        return [RingElem(a) for a in ids]
    raise ValueError(f'Y can only be given for {GROUP_VALUED + RING_VALUED}, not "{kind}"')
