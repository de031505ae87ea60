"""
Cardinality bounds for compound sets f(X_1, ..., X_k) and their projections.
All comparisons are exact.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Optional, Sequence, Set, Tuple

from ..algebra import ElementId, FiniteGroup, cyclic_group
from ..errors import NotPD
from ..hypergraph import FractionalCovering
from ..logger import logger
from ..masks import SubsetMask, check_mask, format_mask, full_mask, project
from ..pdfunc import (
    GroundFamily,
    GroupElem,
    PDFunction,
    Value,
    builtin_ordered_product,
    builtin_sum,
    compound_image,
    compound_preimage,
    is_partition_determined,
    section_image,
)
from ..verdict import Verdict, compare_powers

Point = Tuple[int, ...]


def _covering_sides(
    size: int, factors: Sequence[Tuple[SubsetMask, int, Fraction]]
) -> Tuple[int, int, int]:
    return compare_powers(
        [(size, Fraction(1))], [(count, weight) for _, count, weight in factors]
    )


def _factors_witness(factors: Sequence[Tuple[SubsetMask, int, Fraction]]) -> list:
    return [
        {"s": format_mask(s), "size": count, "weight": weight}
        for s, count, weight in factors
    ]


def check_set_main(
    f: PDFunction,
    Y: Iterable[Value],
    covering: FractionalCovering,
    budget: Optional[int] = None,
) -> Verdict:
    """
    |Y| <= Π |f_s(f⁻¹(Y))|^{α_s} for f partition-determined with respect to the
    covering's family. Both sides are raised to the lcm of the weight denominators.
    """
    if covering.family.k != f.k:
        raise ValueError(f"Covering lives on [{covering.family.k}], f on [{f.k}]")
    determination = is_partition_determined(f, covering.family.members, budget)
    if not determination.holds:
        logger.info("Refusing set bound, %s is not partition-determined", f.name)
        raise NotPD(determination.witness)
    wanted = set(Y)
    preimage = compound_preimage(f, f.ground.full, wanted, budget)
    factors = [
        (s, len(section_image(f, preimage, s)), w) for s, w in covering.items()
    ]
    lhs, rhs, L = _covering_sides(len(wanted), factors)
    return Verdict.exact_le(
        "set-main",
        lhs,
        rhs,
        {
            "function": f.name,
            "Y_size": len(wanted),
            "preimage_size": len(preimage),
            "factors": _factors_witness(factors),
            "power": L,
        },
    )


def check_full_compound(
    f: PDFunction, covering: FractionalCovering, budget: Optional[int] = None
) -> Verdict:
    """|f(X_[k])| <= Π |f_s(X_s)|^{α_s}"""
    image = compound_image(f, f.ground.full, budget)
    verdict = check_set_main(f, image, covering, budget)
    return verdict.model_copy(update={"statement": "full-compound"})


# projections ##########################################################################


def _check_points(Y: Iterable[Sequence[int]]) -> Tuple[Set[Point], int]:
    points = {tuple(y) for y in Y}
    if not points:
        raise ValueError("Y is empty")
    lengths = {len(y) for y in points}
    if len(lengths) != 1:
        raise ValueError(f"Points of Y have different lengths {sorted(lengths)}")
    return points, lengths.pop()


def projection_size(points: Set[Point], k: int, s: SubsetMask) -> int:
    return len({project(y, full_mask(k), s) for y in points})


def check_projection_bound(
    Y: Iterable[Sequence[int]], covering: FractionalCovering
) -> Verdict:
    """|Y| <= Π |π_s(Y)|^{α_s}"""
    points, k = _check_points(Y)
    if covering.family.k != k:
        raise ValueError(f"Covering lives on [{covering.family.k}], Y on [{k}]")
    factors = [(s, projection_size(points, k, s), w) for s, w in covering.items()]
    lhs, rhs, L = _covering_sides(len(points), factors)
    return Verdict.exact_le(
        "projection-bound",
        lhs,
        rhs,
        {"Y": points, "factors": _factors_witness(factors), "power": L},
    )


def check_projection_submodularity(
    Y: Iterable[Sequence[int]], s: SubsetMask, t: SubsetMask
) -> Verdict:
    """|π_{s∪t}(Y)| |π_{s∩t}(Y)| <= |π_s(Y)| |π_t(Y)|, which fails in general."""
    points, k = _check_points(Y)
    check_mask(s, k)
    check_mask(t, k)
    sizes = {
        "s∪t": projection_size(points, k, s | t),
        "s∩t": projection_size(points, k, s & t),
        "s": projection_size(points, k, s),
        "t": projection_size(points, k, t),
    }
    return Verdict.exact_le(
        "projection-submodularity",
        sizes["s∪t"] * sizes["s∩t"],
        sizes["s"] * sizes["t"],
        {"Y": points, "s": format_mask(s), "t": format_mask(t), "sizes": sizes},
    )


NONSUBMODULAR_Y = ((0, 0, 0), (1, 0, 0), (0, 1, 0), (0, 0, 1), (1, 0, 1))


def projection_nonsubmodularity_example() -> Verdict:
    """
    Projections of a five-point set in {0,1}³ onto {1,2}, {2,3}, {1,2,3} and {2}
    have sizes 3, 3, 5 and 2, and 5·2 > 3·3.
    """
    return check_projection_submodularity(NONSUBMODULAR_Y, 0b011, 0b110)


# log-submodularity ####################################################################


def check_log_submodularity(
    f: PDFunction,
    s: SubsetMask,
    t: SubsetMask,
    Y: Optional[Iterable[Value]] = None,
    budget: Optional[int] = None,
    statement: str = "log-submodularity",
) -> Verdict:
    """
    |f_{s∪t}(P)| |f_{s∩t}(P)| <= |f_s(P)| |f_t(P)| with P = f⁻¹(Y) (all of X_[k] if Y
    is not given). Not a theorem; used to look for violations.
    """
    check_mask(s, f.k)
    check_mask(t, f.k)
    full = f.ground.full
    if Y is None:
        y_size = len(compound_image(f, full, budget))
        points = set(f.ground.tuples())
    else:
        wanted = set(Y)
        points = compound_preimage(f, full, wanted, budget)
        y_size = len(wanted)
    sizes = {
        "s∪t": len(section_image(f, points, s | t)),
        "s∩t": len(section_image(f, points, s & t)),
        "s": len(section_image(f, points, s)),
        "t": len(section_image(f, points, t)),
    }
    return Verdict.exact_le(
        statement,
        sizes["s∪t"] * sizes["s∩t"],
        sizes["s"] * sizes["t"],
        {
            "function": f.name,
            "ground": [list(x) for x in f.ground.sets],
            "s": format_mask(s),
            "t": format_mask(t),
            "Y_size": y_size,
            "sizes": sizes,
        },
    )


def sumset_function(G: FiniteGroup, sets: Sequence[Iterable[ElementId]]) -> PDFunction:
    """Sums for abelian G, ordered products otherwise."""
    ground = GroundFamily.of(*sets)
    if G.is_abelian():
        return builtin_sum(G, ground)
    return builtin_ordered_product(G, ground)


def sumset_log_submodularity_probe(
    G: FiniteGroup,
    sets: Sequence[Iterable[ElementId]],
    s: SubsetMask,
    t: SubsetMask,
    Y: Optional[Iterable[ElementId]] = None,
    budget: Optional[int] = None,
) -> Verdict:
    """Log-submodularity of sumset cardinalities, restricted to sums landing in Y."""
    f = sumset_function(G, sets)
    targets = None if Y is None else [GroupElem(y) for y in Y]
    verdict = check_log_submodularity(
        f, s, t, targets, budget, statement="sumset-log-submodularity"
    )
    return verdict.model_copy(
        update={"witness": {**verdict.witness, "structure": G.name}}
    )


NONSUBMODULAR_SETS = ((0, 1), (0, 2), (0, 4))
NONSUBMODULAR_SUMS = (0, 1, 2, 4, 5)


def sumset_nonsubmodularity_example() -> Verdict:
    """
    Sums in Z9 of X = {0,1} x {0,2} x {0,4} are all distinct, so restricting to the
    sums Y = {0,1,2,4,5} mirrors the five-point projection example: 5·2 > 3·3.
    """
    return sumset_log_submodularity_probe(
        cyclic_group(9), NONSUBMODULAR_SETS, 0b011, 0b110, Y=NONSUBMODULAR_SUMS
    )
