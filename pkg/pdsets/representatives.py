"""
Lexicographically smallest preimages and the injectivity certificate built on them.

For Y ⊆ f(X_[k]) every y gets the representative r(y), the lexicographically smallest
point of f^{-1}(y). If f is partition-determined with respect to a family C, then for
every s in C the section f_s is one-to-one on the projections π_s(R).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

from . import settings
from .entropy import (
    JointDistribution,
    Variable,
    entropy_bits,
    is_functionally_determined,
)
from .errors import YNotInImage
from .masks import SubsetMask, format_mask, positions_of, project
from .pdfunc import PDFunction, Value, check_budget, sorted_values
from .verdict import Verdict

Point = Tuple[int, ...]
Orders = Sequence[Sequence[int]]


def _checked_orders(f: PDFunction, orders: Optional[Orders]) -> Tuple[Tuple[int, ...], ...]:
    if orders is None:
        return f.ground.sets
    if len(orders) != f.k:
        raise ValueError(f"Need {f.k} orders, got {len(orders)}")
    result = []
    for i, (order, ground) in enumerate(zip(orders, f.ground.sets), start=1):
        if sorted(order) != list(ground):
            raise ValueError(f"Order {list(order)} is not a permutation of X_{i}")
        result.append(tuple(order))
    return tuple(result)


@dataclass(frozen=True)
class RepresentativeSet:
    f: PDFunction
    Y: Tuple[Value, ...]
    R: Dict[Value, Point]
    orders: Tuple[Tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.R)

    def points(self) -> List[Point]:
        return [self.R[y] for y in self.Y]

    def lex_key(self, x: Point) -> Tuple[int, ...]:
        return lex_key(x, self.orders)

    def uniform(self) -> JointDistribution:
        """Z chosen uniformly from R."""
        p = Fraction(1, len(self.R))
        return JointDistribution(
            supports=self.f.ground.sets, pmf={r: p for r in self.points()}
        )


def lex_key(x: Point, orders: Sequence[Sequence[int]]) -> Tuple[int, ...]:
    return tuple(list(order).index(a) for a, order in zip(x, orders))


def lex_min_representatives(
    f: PDFunction,
    Y: Iterable[Value],
    orders: Optional[Orders] = None,
    budget: Optional[int] = None,
) -> RepresentativeSet:
    """
    r(y) = the smallest point of f^{-1}(y) in the lexicographic order given by
    `orders` (default: carrier index order on every X_i).
    """
    budget = budget if budget is not None else settings.TUPLE_BUDGET
    check_budget(f.ground, None, budget)
    ordered = _checked_orders(f, orders)
    wanted = set(Y)
    R: Dict[Value, Point] = {}
    # product() walks the orders lexicographically, so the first hit is the minimum
    for x in product(*ordered):
        if len(R) == len(wanted):
            break
        y = f.full(x)
        if y in wanted and y not in R:
            R[y] = x
    for y in sorted_values(wanted - set(R)):
        raise YNotInImage(y)
    return RepresentativeSet(f=f, Y=tuple(sorted_values(wanted)), R=R, orders=ordered)


def swap_on(A: Point, B: Point, s: SubsetMask) -> Tuple[Point, Point]:
    """
    C = (A_s, B_s̄) and D = (B_s, A_s̄).

    >>> swap_on((0, 1, 2), (5, 6, 7), 0b010)
    ((5, 1, 7), (0, 6, 2))
    """
    inside = set(positions_of(s))
    C = tuple(a if i in inside else b for i, (a, b) in enumerate(zip(A, B)))
    D = tuple(b if i in inside else a for i, (a, b) in enumerate(zip(A, B)))
    return C, D


class SwapOutcome(NamedTuple):
    C: Point
    D: Point
    # "C<B" (C undercuts B with f(C) = f(B)) or "D<A" (D undercuts A with f(D) = f(A))
    smaller: str
    values_match: bool


def swap_argument(
    f: PDFunction,
    A: Point,
    B: Point,
    s: SubsetMask,
    orders: Optional[Orders] = None,
) -> SwapOutcome:
    """
    For points A, B with f_s(A_s) = f_s(B_s) but A_s != B_s, one of the swapped points
    is lexicographically below A or B with the same f-value (for partition-determined
    f). Neither A nor B can then be a representative.
    """
    ordered = _checked_orders(f, orders)
    positions = positions_of(s)
    j = next((p for p in positions if A[p] != B[p]), None)
    if j is None:
        raise ValueError("A and B agree on s")
    C, D = swap_on(A, B, s)
    if lex_key(A, ordered)[j] < lex_key(B, ordered)[j]:
        return SwapOutcome(C, D, "C<B", f.full(C) == f.full(B))
    return SwapOutcome(C, D, "D<A", f.full(D) == f.full(A))


def verify_section_injectivity(
    f: PDFunction, C: Iterable[SubsetMask], reps: RepresentativeSet
) -> Verdict:
    """
    Checks that f_s is one-to-one on π_s(R) for every s in C. The verdict counts the
    colliding pairs (lhs) against zero (rhs).
    """
    full = f.ground.full
    collisions = 0
    first: Optional[dict] = None
    checked = []
    for s in dict.fromkeys(C):
        checked.append(format_mask(s))
        seen: Dict[Value, Point] = {}
        for r in reps.points():
            section = project(r, full, s)
            value = f.eval(s, section)
            other = seen.setdefault(value, r)
            if project(other, full, s) != section:
                collisions += 1
                if first is None:
                    swap = swap_argument(f, other, r, s, reps.orders)
                    first = {
                        "s": format_mask(s),
                        "A": other,
                        "B": r,
                        "value": value,
                        "C": swap.C,
                        "D": swap.D,
                        "smaller": swap.smaller,
                        "swap_values_match": swap.values_match,
                    }
    witness = {"family": checked, "R_size": len(reps), "Y_size": len(reps.Y)}
    if first is not None:
        witness["collision"] = first
    return Verdict.exact_le("section-injectivity", collisions, 0, witness)


def check_representative_entropy(
    f: PDFunction, C: Iterable[SubsetMask], reps: RepresentativeSet
) -> Verdict:
    """
    With Z uniform on R: H(Z_s | f_s(Z_s)) = 0 for every s in C, checked exactly as
    functional dependence. The float gap H(Z_s) - H(f_s(Z_s)) goes into the witness.
    """
    dist = reps.uniform()
    failures = []
    gaps = {}
    for s in dict.fromkeys(C):
        target = [Variable(s)]
        given = [Variable(s, f)]
        if not is_functionally_determined(dist, target, given):
            failures.append(format_mask(s))
        gaps[format_mask(s)] = entropy_bits(dist, target) - entropy_bits(dist, given)
    return Verdict.exact_le(
        "representative-entropy",
        len(failures),
        0,
        {"failing": failures, "entropy_gaps": gaps},
    )
