"""
Compound sets of polynomials over a finite ring.

``F(X_1, ..., X_n)`` is the set of values F(x) with one element drawn per set symbol,
so repeated symbols reuse the same element ("bound" sums and products). If
F = f(g_1, ..., g_m) pointwise and f is partition-determined, then
``|F(X)| <= Π |f_s(Y_s)|^{α_s}`` with Y_i = g_i(X) and Y_s the product of the Y_i, i in s.

The identity F = f∘g is verified on every point of the grounds before any bound is
reported.
"""

from __future__ import annotations

from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from .. import settings
from ..algebra import ElementId, FiniteRing
from ..errors import IdentityFailsAt, NotCommutative, NotPD
from ..hypergraph import FractionalCovering, singletons
from ..logger import logger
from ..masks import (
    SubsetMask,
    check_mask,
    complement,
    format_mask,
    is_interval,
    positions_of,
)
from ..pdfunc import (
    GroundFamily,
    PDFunction,
    RingElem,
    TupleValue,
    Value,
    builtin_ring_product,
    check_budget,
    compound_image,
    format_value,
    is_partition_determined,
)
from ..polynomial import ExpressionError, RingExpr, bind, variable_index
from ..verdict import Verdict, compare_powers

Expr = Union[str, RingExpr]
Sections = Mapping[SubsetMask, Expr]


def _expr(value: Expr) -> RingExpr:
    return value if isinstance(value, RingExpr) else RingExpr.parse(value)


def _check_variables(expr: RingExpr, prefix: str, allowed: Iterable[int]) -> None:
    indices = set(allowed)
    for name in expr.variables:
        if variable_index(name, prefix) not in indices:
            raise ExpressionError(f'Variable "{name}" is out of range in "{expr}"')


def sections_function(R: FiniteRing, sections: Sections, m: int) -> PDFunction:
    """
    f on Q(Y_1, ..., Y_m) from ring expressions in y1..ym, one per listed mask. A mask
    without an expression maps to its coordinate tuple.
    """
    compiled: Dict[SubsetMask, RingExpr] = {}
    for mask, text in sections.items():
        check_mask(mask, m)
        expr = _expr(text)
        _check_variables(expr, "y", (p + 1 for p in positions_of(mask)))
        compiled[mask] = expr

    def evaluate(mask: SubsetMask, values: Tuple[int, ...]) -> Value:
        expr = compiled.get(mask)
        if expr is None:
            return TupleValue(tuple(RingElem(v) for v in values))
        env = {f"y{p + 1}": v for p, v in zip(positions_of(mask), values)}
        return RingElem(expr.evaluate(R, env))

    ground = GroundFamily.of(*([R.elements] * m))
    return PDFunction(ground, evaluate, kind="custom", name=f"sections@{R.name}")


def check_polynomial_compound(
    R: FiniteRing,
    f: Union[PDFunction, Sections],
    g_list: Sequence[Expr],
    F: Expr,
    covering: FractionalCovering,
    grounds: Sequence[Iterable[ElementId]],
    budget: Optional[int] = None,
    statement: str = "polynomial-compound",
) -> Verdict:
    """
    Checks F = f(g_1, ..., g_m) at every x in X_1 × ... × X_n, then that f is
    partition-determined on the images Y_i = g_i(X), and finally compares
    |F(X)| against Π |f_s(Y_s)|^{α_s} exactly, Y_s = Π_{i in s} Y_i.
    """
    budget = budget if budget is not None else settings.TUPLE_BUDGET
    g = [_expr(e) for e in g_list]
    m = len(g)
    if covering.family.k != m:
        raise ValueError(f"Covering lives on [{covering.family.k}], but m = {m}")
    F_ = _expr(F)
    x_ground = GroundFamily.of(*grounds)
    x_ground.check_elements(R.order)
    n = x_ground.k
    for expr in [F_, *g]:
        _check_variables(expr, "x", range(1, n + 1))
    check_budget(x_ground, None, budget)
    if not isinstance(f, PDFunction):
        f = sections_function(R, f, m)
    if f.k != m:
        raise ValueError(f"f takes {f.k} arguments, but there are {m} polynomials g_i")

    points: List[Tuple[Tuple[int, ...], Tuple[int, ...], int]] = []
    for x in x_ground.tuples():
        env = bind("x", x)
        y = tuple(e.evaluate(R, env) for e in g)
        points.append((x, y, F_.evaluate(R, env)))

    y_ground = GroundFamily.of(*zip(*(y for _, y, _ in points)))
    fbar = f.with_ground(y_ground)
    for x, y, value in points:
        composed = fbar.full(y)
        if composed != RingElem(value):
            logger.info("Refusing polynomial bound, F != f∘g at %s", x)
            raise IdentityFailsAt(
                tuple(R.label(a) for a in x), R.label(value), format_value(composed, R)
            )

    determination = is_partition_determined(fbar, covering.family.members, budget)
    if not determination.holds:
        logger.info("Refusing polynomial bound, f is not partition-determined")
        raise NotPD(determination.witness)

    image = {value for _, _, value in points}
    factors = []
    for s, weight in covering.items():
        # over the product of the Y_i, not over the correlated points g(x)
        size = len(compound_image(fbar, s, budget))
        factors.append({"s": format_mask(s), "size": size, "weight": weight})
    lhs, rhs, L = compare_powers(
        [(len(image), 1)], [(x["size"], x["weight"]) for x in factors]
    )
    return Verdict.exact_le(
        statement,
        lhs,
        rhs,
        {
            "ring": R.name,
            "F": str(F_),
            "g": [str(e) for e in g],
            "f": fbar.name,
            "grounds": [[R.label(a) for a in s] for s in x_ground.sets],
            "|F(X)|": len(image),
            "factors": factors,
            "power": L,
        },
    )


def check_factorized(
    R: FiniteRing,
    factors: Sequence[Expr],
    covering: FractionalCovering,
    grounds: Sequence[Iterable[ElementId]],
    budget: Optional[int] = None,
) -> Verdict:
    """
    F = g_1 g_2 ... g_m with f the ordered ring product. In a non-commutative ring the
    product only splits along intervals, so every member of the family (and its
    complement) must be an interval of [m].
    """
    g = [_expr(e) for e in factors]
    m = len(g)
    if m == 0:
        raise ValueError("Need at least one factor")
    if not R.commutative_mul:
        for s in covering.family.members:
            rest = complement(s, m)
            if not is_interval(s) or (rest and not is_interval(rest)):
                logger.info("Refusing factorized bound on %s", R.name)
                raise NotCommutative(R.name)
    F = RingExpr.parse(" * ".join(f"({e})" for e in g))
    product = builtin_ring_product(R, GroundFamily.of(*([R.elements] * m)))
    return check_polynomial_compound(
        R, product, g, F, covering, grounds, budget, statement="factorized"
    )


SUM_OF_SQUARES_SECTIONS = {0b01: "y1^2", 0b10: "y2", 0b11: "y1^2 - y2"}
SUM_OF_SQUARES_G = ("x1 + x2", "x1*x2 + x2*x1")
SUM_OF_SQUARES_F = "x1^2 + x2^2"


def check_sum_of_squares(
    R: FiniteRing,
    A: Iterable[ElementId],
    B: Iterable[ElementId],
    budget: Optional[int] = None,
) -> Verdict:
    """
    |A² ⊕ B²| <= |(A ⊕ B)²| · |A·B ⊕ B·A| with bound operations, from
    x1² + x2² = (x1 + x2)² - (x1 x2 + x2 x1).
    """
    covering = FractionalCovering.of(singletons(2), [1, 1])
    return check_polynomial_compound(
        R,
        SUM_OF_SQUARES_SECTIONS,
        SUM_OF_SQUARES_G,
        SUM_OF_SQUARES_F,
        covering,
        [A, B],
        budget,
        statement="sum-of-squares",
    )
