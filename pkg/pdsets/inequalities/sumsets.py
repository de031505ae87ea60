"""
Sumset cardinality bounds in abelian and non-abelian groups.

In a non-abelian group ``X + Y`` is the ordered product set, composed left to right.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Set, Tuple

from .. import settings
from ..algebra import ElementId, FiniteGroup, dihedral_group, nary_sumset
from ..errors import (
    DNotInSumset,
    MiddleEnumerationBudgetExceeded,
    NotAbelian,
    NotAPartition,
    NotRegular,
)
from ..hypergraph import (
    FractionalCovering,
    SubsetFamily,
    degrees,
    is_regular,
    leave_one_out,
    singletons,
)
from ..logger import logger
from ..masks import format_mask, positions_of
from ..utils import format_rational
from ..verdict import Verdict, compare_powers

Subset = Iterable[ElementId]
Pair = Tuple[int, int]


def _frozen(sets: Sequence[Subset]) -> List[Set[ElementId]]:
    return [set(s) for s in sets]


def _require_abelian(G: FiniteGroup) -> None:
    if not G.is_abelian():
        logger.info("Refusing abelian sumset bound on %s", G.name)
        raise NotAbelian(G.name)


def partial_sumset(G: FiniteGroup, B: Sequence[Set[ElementId]], s: int) -> Set[ElementId]:
    """B⁺_s = Σ_{i∈s} B_i"""
    return nary_sumset(G, *(B[p] for p in positions_of(s)))


def _check_sumset_inputs(
    G: FiniteGroup, A: Set[ElementId], B: List[Set[ElementId]], D: Set[ElementId]
) -> None:
    _require_abelian(G)
    if not D:
        raise ValueError("D is empty")
    total = nary_sumset(G, *B)
    for d in sorted(D):
        if d not in total:
            logger.info("Refusing abelian sumset bound, D is not inside B⁺")
            raise DNotInSumset(G.label(d))
    if not A:
        raise ValueError("A is empty")


def check_abelian_sumset(
    G: FiniteGroup,
    A: Subset,
    B: Sequence[Subset],
    D: Subset,
    covering: FractionalCovering,
) -> Verdict:
    """
    |A+D|^c <= |D|^{c-1} Π |A + B⁺_s|^{α_s} for a fractional partition α with total
    weight c, and D ⊆ B⁺_[k].
    """
    A_, B_, D_ = set(A), _frozen(B), set(D)
    if covering.family.k != len(B_):
        raise ValueError(
            f"Covering lives on [{covering.family.k}], but {len(B_)} sets B_i given"
        )
    for i, weight in enumerate(covering.coverage(), start=1):
        if weight != 1:
            raise NotAPartition(i, format_rational(weight))
    _check_sumset_inputs(G, A_, B_, D_)

    c = covering.total
    AD = len(nary_sumset(G, A_, D_))
    factors = []
    for s, weight in covering.items():
        size = len(nary_sumset(G, A_, partial_sumset(G, B_, s)))
        factors.append({"s": format_mask(s), "size": size, "weight": weight})
    lhs, rhs, L = compare_powers(
        [(AD, c)],
        [(len(D_), c - 1)] + [(x["size"], x["weight"]) for x in factors],
    )
    return Verdict.exact_le(
        "abelian-sumset",
        lhs,
        rhs,
        {
            "structure": G.name,
            "|A+D|": AD,
            "|D|": len(D_),
            "c": c,
            "factors": factors,
            "power": L,
        },
    )


def check_regular_abelian(
    G: FiniteGroup,
    A: Subset,
    B: Sequence[Subset],
    D: Subset,
    family: SubsetFamily,
    statement: str = "regular-abelian",
) -> Verdict:
    """|A+D|^{|C|} <= |D|^{|C|-r} Π |A + B⁺_s| for an r-regular family C."""
    A_, B_, D_ = set(A), _frozen(B), set(D)
    if family.k != len(B_):
        raise ValueError(f"Family lives on [{family.k}], but {len(B_)} sets B_i given")
    r = is_regular(family)
    if r is None:
        raise NotRegular(degrees(family))
    _check_sumset_inputs(G, A_, B_, D_)

    n = len(family)
    AD = len(nary_sumset(G, A_, D_))
    sizes = {}
    rhs = len(D_) ** (n - r)
    for s in family.members:
        size = len(nary_sumset(G, A_, partial_sumset(G, B_, s)))
        sizes[format_mask(s)] = size
        rhs *= size
    return Verdict.exact_le(
        statement,
        AD**n,
        rhs,
        {
            "structure": G.name,
            "family": family,
            "r": r,
            "|A+D|": AD,
            "|D|": len(D_),
            "sizes": sizes,
        },
    )


def gmr_singletons(G: FiniteGroup, A: Subset, B: Sequence[Subset], D: Subset) -> Verdict:
    """|A+D|^k <= |D|^{k-1} Π |A + B_i|"""
    B_ = _frozen(B)
    return check_regular_abelian(
        G, A, B_, D, singletons(len(B_)), statement="gmr-singletons"
    )


def gmr_leave_one_out(
    G: FiniteGroup, A: Subset, B: Sequence[Subset], D: Subset
) -> Verdict:
    """|A+D|^k <= |D| Π |A + B̄_i| with B̄_i the sum of all B_j, j != i."""
    B_ = _frozen(B)
    return check_regular_abelian(
        G, A, B_, D, leave_one_out(len(B_)), statement="gmr-leave-one-out"
    )


# non-abelian groups ###################################################################


def conditioned_size(
    G: FiniteGroup,
    X: Sequence[Set[ElementId]],
    i: int,
    j: int,
    budget: Optional[int] = None,
) -> Tuple[int, Tuple[ElementId, ...]]:
    """
    A(i, j) = max |X_i + x_{i+1} + ... + x_{j-1} + X_j| over the middle elements,
    with 1-based i < j. Returns the maximum and one maximizing middle tuple.

    Middle tuples with the same product give the same set, so the enumeration runs
    over distinct partial products.
    """
    if not 1 <= i < j <= len(X):
        raise ValueError(f"Need 1 <= i < j <= {len(X)}, got ({i}, {j})")
    budget = budget if budget is not None else settings.TUPLE_BUDGET
    t = G.table
    middles: Dict[ElementId, Tuple[ElementId, ...]] = {G.identity: ()}
    work = 0
    for middle in X[i : j - 1]:
        work += len(middles) * len(middle)
        if work > budget:
            raise MiddleEnumerationBudgetExceeded(work, budget, (i, j))
        step: Dict[ElementId, Tuple[ElementId, ...]] = {}
        for m, path in middles.items():
            for x in sorted(middle):
                step.setdefault(t[m][x], path + (x,))
        middles = step
    work += len(middles) * len(X[i - 1]) * len(X[j - 1])
    if work > budget:
        raise MiddleEnumerationBudgetExceeded(work, budget, (i, j))

    best, best_path = -1, ()
    for m in sorted(middles):
        size = len({t[t[a][m]][b] for a in X[i - 1] for b in X[j - 1]})
        if size > best:
            best, best_path = size, middles[m]
    return best, best_path


def _conditioned_sizes(
    G: FiniteGroup, X: Sequence[Set[ElementId]], budget: Optional[int]
) -> Dict[Pair, Tuple[int, Tuple[ElementId, ...]]]:
    k = len(X)
    return {
        (i, j): conditioned_size(G, X, i, j, budget)
        for i, j in combinations(range(1, k + 1), 2)
    }


def _pair_key(pair: Pair) -> str:
    return f"A({pair[0]},{pair[1]})"


def check_nonabelian(
    G: FiniteGroup, sets: Sequence[Subset], budget: Optional[int] = None
) -> Verdict:
    """|X_1 + ... + X_k|^{k-1} <= Π_{i<j} A(i, j). Abelian groups are accepted too."""
    X = _frozen(sets)
    k = len(X)
    if k < 2:
        raise ValueError("Need at least 2 sets")
    total = len(nary_sumset(G, *X))
    conditioned = _conditioned_sizes(G, X, budget)
    rhs = 1
    for size, _ in conditioned.values():
        rhs *= size
    return Verdict.exact_le(
        "nonabelian",
        total ** (k - 1),
        rhs,
        {
            "structure": G.name,
            "|X1+...+Xk|": total,
            "conditioned": {_pair_key(p): size for p, (size, _) in conditioned.items()},
            "maximizers": {
                _pair_key(p): [G.label(x) for x in path]
                for p, (_, path) in conditioned.items()
            },
        },
        note="abelian group" if G.is_abelian() else "",
    )


def check_ruzsa_triple(
    G: FiniteGroup,
    S: Subset,
    T: Subset,
    U: Subset,
    budget: Optional[int] = None,
) -> Verdict:
    """|S+T+U|² <= max_{t∈T} |S+T| |T+U| |S+t+U|"""
    X = _frozen([S, T, U])
    total = len(nary_sumset(G, *X))
    ST = len(nary_sumset(G, X[0], X[1]))
    TU = len(nary_sumset(G, X[1], X[2]))
    middle, path = conditioned_size(G, X, 1, 3, budget)
    return Verdict.exact_le(
        "ruzsa-triple",
        total**2,
        ST * TU * middle,
        {
            "structure": G.name,
            "|S+T+U|": total,
            "|S+T|": ST,
            "|T+U|": TU,
            "max|S+t+U|": middle,
            "t": [G.label(x) for x in path],
        },
    )


def check_naive_pairwise(G: FiniteGroup, sets: Sequence[Subset]) -> Verdict:
    """|X_1 + ... + X_k|^{k-1} <= Π_{i<j} |X_i + X_j|, false in non-abelian groups."""
    X = _frozen(sets)
    k = len(X)
    if k < 2:
        raise ValueError("Need at least 2 sets")
    total = len(nary_sumset(G, *X))
    pairs = {}
    rhs = 1
    for i, j in combinations(range(1, k + 1), 2):
        size = len(nary_sumset(G, X[i - 1], X[j - 1]))
        pairs[f"|X{i}+X{j}|"] = size
        rhs *= size
    return Verdict.exact_le(
        "naive-pairwise",
        total ** (k - 1),
        rhs,
        {"structure": G.name, "|X1+...+Xk|": total, "pairs": pairs},
    )


def check_ruzsa_quadruple(
    G: FiniteGroup,
    S: Subset,
    T: Subset,
    U: Subset,
    V: Subset,
    budget: Optional[int] = None,
) -> Verdict:
    """
    |S+T+U+V|³ against max_{t,u} |S+T+U| |S+T+u+V| |S+t+U+V| |T+U+V|.

    Whether this holds in general is open, the verdict describes this instance only.
    The factor with u does not involve t and vice versa, so the maximum splits.
    """
    X = _frozen([S, T, U, V])
    total = len(nary_sumset(G, *X))
    STU = len(nary_sumset(G, X[0], X[1], X[2]))
    TUV = len(nary_sumset(G, X[1], X[2], X[3]))
    work = (len(X[2]) + len(X[1])) * len(X[0]) * len(X[1]) * len(X[3])
    budget = budget if budget is not None else settings.TUPLE_BUDGET
    if work > budget:
        raise MiddleEnumerationBudgetExceeded(work, budget, (1, 4))

    def best(fixed: int) -> Tuple[int, ElementId]:
        # fixed = 2: max over u in U of |S+T+u+V|; fixed = 1: max over t of |S+t+U+V|
        result = (-1, G.identity)
        for x in sorted(X[fixed]):
            operands = [X[0], X[1], X[2], X[3]]
            operands[fixed] = {x}
            size = len(nary_sumset(G, *operands))
            if size > result[0]:
                result = (size, x)
        return result

    STuV, u_star = best(2)
    StUV, t_star = best(1)
    return Verdict.exact_le(
        "ruzsa-quadruple",
        total**3,
        STU * STuV * StUV * TUV,
        {
            "structure": G.name,
            "|S+T+U+V|": total,
            "|S+T+U|": STU,
            "max|S+T+u+V|": STuV,
            "max|S+t+U+V|": StUV,
            "|T+U+V|": TUV,
            "t": G.label(t_star),
            "u": G.label(u_star),
        },
        note="open problem probe",
    )


def probe_weighted_nonabelian(
    G: FiniteGroup,
    sets: Sequence[Subset],
    weights: Mapping[Pair, Fraction],
    budget: Optional[int] = None,
) -> Verdict:
    """
    |X_1 + ... + X_k|^{(2/k) Σ w} against Π A(i, j)^{w_ij}. Unit weights give the
    non-abelian bound; other weights are unproven.
    """
    X = _frozen(sets)
    k = len(X)
    if k < 2:
        raise ValueError("Need at least 2 sets")
    pairs = list(combinations(range(1, k + 1), 2))
    w = {p: Fraction(weights.get(p, 0)) for p in pairs}
    unknown = set(weights) - set(pairs)
    if unknown:
        raise ValueError(f"Weights given for pairs that are not i < j <= k: {unknown}")
    for p, value in w.items():
        if value < 0:
            raise ValueError(f"Negative weight {value} for {_pair_key(p)}")
    exponent = Fraction(2, k) * sum(w.values(), Fraction(0))
    total = len(nary_sumset(G, *X))
    conditioned = _conditioned_sizes(G, X, budget)
    lhs, rhs, L = compare_powers(
        [(total, exponent)], [(conditioned[p][0], w[p]) for p in pairs]
    )
    return Verdict.exact_le(
        "weighted-nonabelian",
        lhs,
        rhs,
        {
            "structure": G.name,
            "|X1+...+Xk|": total,
            "exponent": exponent,
            "weights": {_pair_key(p): w[p] for p in pairs},
            "conditioned": {_pair_key(p): conditioned[p][0] for p in pairs},
            "power": L,
        },
        note="weighted probe, no claim",
    )


# the dihedral example #################################################################

DIHEDRAL_LABELS = (("e", "F"), ("R",), ("e", "F"))


def dihedral_example() -> Tuple[FiniteGroup, List[Set[ElementId]]]:
    """S = {e, F}, T = {R}, U = {e, F} in the dihedral group of order 6."""
    G = dihedral_group(3)
    sets = [{G.element_by_label(x) for x in labels} for labels in DIHEDRAL_LABELS]
    return G, sets
