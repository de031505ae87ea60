"""
Entropy inequalities for functions of independent random variables.

All laws are exact rational pmfs; only the entropies are floats, compared in the
tolerance band of ``Verdict.entropy_le``.
"""

from __future__ import annotations

import math
from fractions import Fraction
from itertools import combinations
from typing import Dict, Iterable, List, Mapping, Optional, Sequence

from ..entropy import (
    JointDistribution,
    Variable,
    conditional_entropy_bits,
    coords,
    entropy_bits,
    entropy_of_pmf,
    format_pmf,
    mutual_information_bits,
    point_mass,
    product_distribution,
    pushforward,
    uniform_on,
    uniformizing_joint,
)
from ..errors import InvalidChain, NestedPair, NotStronglyPD
from ..hypergraph import CompressionStep, FractionalCovering, SubsetFamily, replay
from ..logger import logger
from ..masks import SubsetMask, check_mask, format_mask, mask_of
from ..pdfunc import (
    PDFunction,
    Value,
    is_strongly_partition_determined,
    sorted_values,
)
from ..verdict import Verdict

Marginals = Sequence[Mapping[int, Fraction]]


def require_strongly_pd(f: PDFunction, budget: Optional[int] = None) -> None:
    result = is_strongly_partition_determined(f, budget)
    if not result.holds:
        logger.info("Refusing entropy check, %s is not strongly PD", f.name)
        raise NotStronglyPD(result.witness)


def _marginals_witness(marginals: Marginals) -> List[Dict[str, str]]:
    return [format_pmf(m) for m in marginals]


class _EntropyCache:
    """H(f_s(Z_s)) per mask for one fixed joint law."""

    def __init__(self, f: PDFunction, dist: JointDistribution):
        self.f = f
        self.dist = dist
        self._values: Dict[SubsetMask, float] = {}

    def __call__(self, mask: SubsetMask) -> float:
        if mask not in self._values:
            self._values[mask] = entropy_bits(self.dist, [Variable(mask, self.f)])
        return self._values[mask]


def check_entropy_submodularity(
    f: PDFunction,
    marginals: Marginals,
    s: SubsetMask,
    t: SubsetMask,
    budget: Optional[int] = None,
    check_hypothesis: bool = True,
) -> Verdict:
    """H(f_{s∪t}) + H(f_{s∩t}) <= H(f_s) + H(f_t) for independent Z_i."""
    check_mask(s, f.k, allow_empty=True)
    check_mask(t, f.k, allow_empty=True)
    if check_hypothesis:
        require_strongly_pd(f, budget)
    H = _EntropyCache(f, product_distribution(marginals))
    lhs = H(s | t) + H(s & t)
    rhs = H(s) + H(t)
    return Verdict.entropy_le(
        "entropy-submodularity",
        lhs,
        rhs,
        {
            "function": f.name,
            "s": format_mask(s),
            "t": format_mask(t),
            "H(f_s∪t)": H(s | t),
            "H(f_s∩t)": H(s & t),
            "H(f_s)": H(s),
            "H(f_t)": H(t),
            "marginals": _marginals_witness(marginals),
        },
    )


def check_compression_entropy(
    f: PDFunction,
    marginals: Marginals,
    A: SubsetFamily,
    B: SubsetFamily,
    steps: Sequence[CompressionStep],
    budget: Optional[int] = None,
) -> Verdict:
    """
    Σ_{t∈B} H(f_t) <= Σ_{s∈A} H(f_s) along a chain of elementary compressions from A
    to B. Every step is checked as a submodularity instance; its margin equals the drop
    of the family sum.
    """
    try:
        chain = replay(A, steps)
    except NestedPair as e:
        raise InvalidChain(f"Not an elementary compression: {e}") from e
    if chain[-1] != B:
        raise InvalidChain(f"Compressions end at {chain[-1]}, not at {B}")
    require_strongly_pd(f, budget)
    H = _EntropyCache(f, product_distribution(marginals))

    def family_sum(family: SubsetFamily) -> float:
        return sum(H(m) for m in family.members)

    step_reports = []
    worst = None
    for step, before, after in zip(steps, chain, chain[1:]):
        lhs = H(step.first | step.second) + H(step.first & step.second)
        rhs = H(step.first) + H(step.second)
        v = Verdict.entropy_le("entropy-submodularity", lhs, rhs)
        step_reports.append(
            {
                "step": str(step),
                "status": v.status,
                "margin": v.margin,
                "drop": family_sum(before) - family_sum(after),
            }
        )
        if worst is None or v.margin < worst.margin:
            worst = v
    verdict = Verdict.entropy_le(
        "compression-entropy",
        family_sum(B),
        family_sum(A),
        {
            "function": f.name,
            "A": A,
            "B": B,
            "steps": step_reports,
            "marginals": _marginals_witness(marginals),
        },
    )
    if worst is not None and worst.violated and not verdict.violated:
        return verdict.model_copy(
            update={"status": "violated", "note": "an elementary step fails"}
        )
    return verdict


def check_entropy_upper_bound(
    f: PDFunction,
    marginals: Marginals,
    covering: FractionalCovering,
    budget: Optional[int] = None,
) -> Verdict:
    """H(f_[k]) <= Σ α_s H(f_s)"""
    if covering.family.k != f.k:
        raise ValueError(f"Covering lives on [{covering.family.k}], f on [{f.k}]")
    require_strongly_pd(f, budget)
    H = _EntropyCache(f, product_distribution(marginals))
    lhs = H(f.ground.full)
    terms = {format_mask(m): float(w) * H(m) for m, w in covering.items()}
    rhs = sum(float(w) * H(m) for m, w in covering.items())
    return Verdict.entropy_le(
        "entropy-upper-bound",
        lhs,
        rhs,
        {
            "function": f.name,
            "covering": covering,
            "terms": terms,
            "marginals": _marginals_witness(marginals),
        },
    )


def quadruple_sides(dist: JointDistribution) -> tuple:
    """
    H(Z_1..Z_4) against
    (1/3)[H(Z_1Z_2Z_3) + H(Z_2Z_3Z_4) + H(Z_1Z_3Z_4 | Z_2) + H(Z_1Z_2Z_4 | Z_3)].
    """
    if dist.k != 4:
        raise ValueError(f"Need a joint law of 4 variables, got {dist.k}")
    lhs = entropy_bits(dist, [coords(1, 2, 3, 4)])
    terms = {
        "H(Z1,Z2,Z3)": entropy_bits(dist, [coords(1, 2, 3)]),
        "H(Z2,Z3,Z4)": entropy_bits(dist, [coords(2, 3, 4)]),
        "H(Z1,Z3,Z4|Z2)": conditional_entropy_bits(dist, [coords(1, 3, 4)], [coords(2)]),
        "H(Z1,Z2,Z4|Z3)": conditional_entropy_bits(dist, [coords(1, 2, 4)], [coords(3)]),
    }
    return lhs, sum(terms.values()) / 3, terms


def check_entropy_quadruple(dist: JointDistribution) -> Verdict:
    """The entropy form of the four-set product bound. It is false in general."""
    lhs, rhs, terms = quadruple_sides(dist)
    return Verdict.entropy_le(
        "entropy-quadruple",
        lhs,
        rhs,
        {"terms": terms, "pmf": format_pmf(dist.pmf)},
        note="entropy analogue of the four-set problem",
    )


def entropy_counterexample_distribution(
    m: int = 2, degenerate: bool = False
) -> JointDistribution:
    """Z_2 = Z_3 uniform on m points (a point mass if degenerate), Z_1 = Z_4 = 0."""
    if m < 1:
        raise ValueError("Need m >= 1")
    law = point_mass(0) if degenerate else uniform_on(range(m))
    pmf = {(0, a, a, 0): p for a, p in law.items()}
    support = tuple(sorted(law))
    return JointDistribution(supports=((0,), support, support, (0,)), pmf=pmf)


def check_entropy_counterexample_4sets(m: int = 2, degenerate: bool = False) -> Verdict:
    """With Z_2 = Z_3 the left side is H(Z_2) and the right side (2/3) H(Z_2)."""
    dist = entropy_counterexample_distribution(m, degenerate)
    lhs, rhs, terms = quadruple_sides(dist)
    return Verdict.entropy_le(
        "entropy-4sets",
        lhs,
        rhs,
        {"m": m, "degenerate": degenerate, "terms": terms, "pmf": format_pmf(dist.pmf)},
        note="Z2 = Z3, Z1 = Z4 = 0",
    )


def check_pairwise_conditional(dist: JointDistribution) -> Verdict:
    """(k-1) H(Z_1..Z_k) <= Σ_{i<j} H(Z_i, Z_j | Z_t for i < t < j)"""
    k = dist.k
    if k < 2:
        raise ValueError("Need at least 2 variables")
    lhs = (k - 1) * entropy_bits(dist, [Variable(dist.full)])
    terms = {}
    for i, j in combinations(range(1, k + 1), 2):
        middle = mask_of(range(i + 1, j))
        given = [Variable(middle)] if middle else []
        terms[f"H(Z{i},Z{j}|Z({i},{j}))"] = conditional_entropy_bits(
            dist, [coords(i, j)], given
        )
    return Verdict.entropy_le(
        "pairwise-conditional",
        lhs,
        sum(terms.values()),
        {"k": k, "terms": terms},
    )


def check_mutual_information_identity(
    f: PDFunction,
    marginals: Marginals,
    s: SubsetMask,
    t: SubsetMask,
    budget: Optional[int] = None,
) -> Verdict:
    """
    For disjoint s, t: I(f_{s∪t}; f_t) >= H(f_{s∪t}) - H(f_s), with equality when f is
    strongly partition-determined and Z independent.

    In the strong case the verdict compares the gap |I - (H_u - H_s)| against 0,
    otherwise H_u - H_s against I.
    """
    check_mask(s, f.k)
    check_mask(t, f.k)
    if s & t:
        raise ValueError(f"{format_mask(s)} and {format_mask(t)} are not disjoint")
    u = s | t
    dist = product_distribution(marginals)
    H = _EntropyCache(f, dist)
    info = mutual_information_bits(dist, [Variable(u, f)], [Variable(t, f)])
    difference = H(u) - H(s)
    strong = is_strongly_partition_determined(f, budget).holds
    witness = {
        "function": f.name,
        "s": format_mask(s),
        "t": format_mask(t),
        "I(f_s∪t;f_t)": info,
        "H(f_s∪t)-H(f_s)": difference,
        "strongly_pd": strong,
    }
    if strong:
        return Verdict.entropy_le(
            "mutual-information", abs(info - difference), 0.0, witness, note="equality"
        )
    return Verdict.entropy_le("mutual-information", difference, info, witness)


def check_data_processing(
    dist: JointDistribution, f: PDFunction, A: SubsetMask, B: SubsetMask
) -> Verdict:
    """I(f_A(Z_A); Z_B) <= I(Z_A; Z_B) for an arbitrary joint law."""
    check_mask(A, dist.k)
    check_mask(B, dist.k)
    coarse = mutual_information_bits(dist, [Variable(A, f)], [Variable(B)])
    fine = mutual_information_bits(dist, [Variable(A)], [Variable(B)])
    return Verdict.entropy_le(
        "data-processing",
        coarse,
        fine,
        {
            "function": f.name,
            "A": format_mask(A),
            "B": format_mask(B),
            "I(f_A;Z_B)": coarse,
            "I(Z_A;Z_B)": fine,
        },
    )


def check_uniformizing(f: PDFunction, Y: Optional[Iterable[Value]] = None) -> Verdict:
    """
    The uniformizing joint law pushes forward to the exactly uniform law on Y.
    Counts the values of Y with a mass other than 1/|Y|.
    """
    dist = uniformizing_joint(f, Y)
    law = pushforward(dist, f, f.ground.full)
    targets = set(law) if Y is None else set(Y)
    expected = Fraction(1, len(targets))
    wrong = [y for y in sorted_values(targets) if law.get(y) != expected]
    wrong += [y for y in sorted_values(set(law) - targets)]
    return Verdict.exact_le(
        "uniformizing-joint",
        len(wrong),
        0,
        {
            "function": f.name,
            "Y_size": len(targets),
            "support_size": len(dist.pmf),
            "H(f)": entropy_of_pmf(law),
            "log2|Y|": math.log2(len(targets)),
            "wrong": wrong[:10],
        },
    )
