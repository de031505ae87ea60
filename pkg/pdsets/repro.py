"""
Fixed reproductions of the worked examples. Each item recomputes its instance and
compares the outcome with the recorded numbers; an item passes when every number
matches, whether the inequality holds or is violated.
"""

from __future__ import annotations

from typing import Callable, Dict, List, Optional, Tuple

from .algebra import cyclic_group, ring_mod
from .entropy import uniform_on
from .errors import UnknownItem
from .hypergraph import all_subsets_of_size, regular_covering
from .inequalities import (
    check_entropy_counterexample_4sets,
    check_entropy_upper_bound,
    check_naive_pairwise,
    check_nonabelian,
    check_regular_abelian,
    check_ruzsa_triple,
    check_sum_of_squares,
    dihedral_example,
    gmr_leave_one_out,
    gmr_singletons,
    projection_nonsubmodularity_example,
    sumset_nonsubmodularity_example,
)
from .output import Default, Output
from .pdfunc import GroundFamily, builtin_sum
from .scenario import RunResult
from .settings import ENTROPY_TOLERANCE
from .verdict import Verdict

# verdicts and the list of mismatches against the recorded numbers
Outcome = Tuple[List[Verdict], List[str]]
Reproduction = Callable[[], Outcome]

ITEMS: Dict[str, Reproduction] = dict()
SUMMARIES: Dict[str, str] = dict()


def item(name: str, summary: str):
    def register(fn: Reproduction) -> Reproduction:
        ITEMS[name] = fn
        SUMMARIES[name] = summary
        return fn

    return register


def expect(mismatches: List[str], what: str, got, wanted) -> None:
    if got != wanted:
        mismatches.append(f"{what}: got {got}, recorded {wanted}")


def expect_close(mismatches: List[str], what: str, got: float, wanted: float) -> None:
    if abs(got - wanted) > ENTROPY_TOLERANCE:
        mismatches.append(f"{what}: got {got:.9f}, recorded {wanted:.9f}")


@item("projection-counterexample", "5·2 > 3·3 for projections of five points")
def projection_counterexample() -> Outcome:
    v = projection_nonsubmodularity_example()
    bad: List[str] = []
    sizes = v.witness["sizes"]
    got = (sizes["s"], sizes["t"], sizes["s∪t"], sizes["s∩t"])
    expect(bad, "projection sizes", got, (3, 3, 5, 2))
    expect(bad, "sides", (v.lhs, v.rhs), (10, 9))
    expect(bad, "status", v.status, "violated")
    return [v], bad


@item(
    "dihedral-triple",
    "16 > 8 for the pairwise bound in D3, 16 <= 16 with middles and for the triple form",
)
def dihedral_triple() -> Outcome:
    G, sets = dihedral_example()
    naive = check_naive_pairwise(G, sets)
    conditioned = check_nonabelian(G, sets)
    triple = check_ruzsa_triple(G, *sets)
    bad: List[str] = []
    expect(bad, "|S+T+U|", naive.witness["|X1+...+Xk|"], 4)
    expect(bad, "pairwise sums", sorted(naive.witness["pairs"].values()), [2, 2, 2])
    expect(bad, "pairwise bound", (naive.lhs, naive.rhs, naive.status), (16, 8, "violated"))
    expect(bad, "A(1,3)", conditioned.witness["conditioned"]["A(1,3)"], 4)
    expect(
        bad,
        "bound with middles",
        (conditioned.lhs, conditioned.rhs, conditioned.status),
        (16, 16, "holds"),
    )
    expect(bad, "max|S+t+U|", triple.witness["max|S+t+U|"], 4)
    expect(bad, "triple form", (triple.lhs, triple.rhs, triple.status), (16, 16, "holds"))
    return [naive, conditioned, triple], bad


@item("entropy-4sets", "1 bit against 2/3 bit, violated by 1/3 bit")
def entropy_4sets() -> Outcome:
    v = check_entropy_counterexample_4sets(m=2)
    bad: List[str] = []
    expect_close(bad, "lhs", float(v.lhs), 1.0)
    expect_close(bad, "rhs", float(v.rhs), 2 / 3)
    expect_close(bad, "margin", float(v.margin), -1 / 3)
    expect(bad, "status", v.status, "violated")
    return [v], bad


@item("sum-of-squares", "|A²⊕B²| = 6 <= 5·4 in Z13 for A = {1,2,3}, B = {0,5}")
def sum_of_squares() -> Outcome:
    v = check_sum_of_squares(ring_mod(13), [1, 2, 3], [0, 5])
    bad: List[str] = []
    sizes = [x["size"] for x in v.witness["factors"]]
    expect(bad, "|A²⊕B²|", v.witness["|F(X)|"], 6)
    expect(bad, "|(A⊕B)²|, |A·B⊕B·A|", sizes, [5, 4])
    expect(bad, "status", v.status, "holds")
    return [v], bad


@item("log-submodularity", "5·2 > 3·3 for sums of {0,1}, {0,2}, {0,4} in Z9")
def log_submodularity() -> Outcome:
    v = sumset_nonsubmodularity_example()
    bad: List[str] = []
    expect(bad, "sides", (v.lhs, v.rhs, v.status), (10, 9, "violated"))
    return [v], bad


@item("illustrative-entropy", "H(Z1+Z2+Z3) <= (1/2) Σ H(Zi+Zj) in Z5")
def illustrative_entropy() -> Outcome:
    G = cyclic_group(5)
    ground = GroundFamily.of([0, 1], [0, 2], [0, 3])
    f = builtin_sum(G, ground)
    marginals = [uniform_on(X) for X in ground.sets]
    covering = regular_covering(all_subsets_of_size(3, 2))
    v = check_entropy_upper_bound(f, marginals, covering)
    bad: List[str] = []
    expect(bad, "status", v.status, "holds")
    return [v], bad


ILLUSTRATIVE_SETS = ([0, 1, 2], [[0, 1], [0, 3], [0, 5]], [0, 1, 3, 4])


@item("illustrative-sumset", "|A+D|^3 <= |D| Π |A+Bi+Bj| in Z11 for the pairs family")
def illustrative_sumset() -> Outcome:
    A, B, D = ILLUSTRATIVE_SETS
    v = check_regular_abelian(cyclic_group(11), A, B, D, all_subsets_of_size(3, 2))
    bad: List[str] = []
    expect(bad, "status", v.status, "holds")
    return [v], bad


@item("gmr-singletons", "|A+D|^k <= |D|^{k-1} Π |A+Bi| in Z11")
def gmr_singletons_item() -> Outcome:
    A, B, D = ILLUSTRATIVE_SETS
    v = gmr_singletons(cyclic_group(11), A, B, D)
    bad: List[str] = []
    expect(bad, "status", v.status, "holds")
    return [v], bad


@item("gmr-leave-one-out", "|A+D|^k <= |D| Π |A + sum of all Bj but one| in Z11")
def gmr_leave_one_out_item() -> Outcome:
    A, B, D = ILLUSTRATIVE_SETS
    v = gmr_leave_one_out(cyclic_group(11), A, B, D)
    bad: List[str] = []
    expect(bad, "status", v.status, "holds")
    return [v], bad


def item_names() -> List[str]:
    return list(ITEMS)


def run_repro(name: str, output: Output = Default(), seed: Optional[int] = None) -> RunResult:
    """Runs one item, or every item for ``all``."""
    key = name.strip().lower()
    if key != "all" and key not in ITEMS:
        raise UnknownItem(name, known=[*ITEMS, "all"])
    names = item_names() if key == "all" else [key]
    result = RunResult(command="repro", source=key, seed=seed)
    output.start(command="repro", source=key)
    try:
        for n in names:
            verdicts, mismatches = ITEMS[n]()
            for v in verdicts:
                v = v.with_run_info(seed=seed)
                result.verdicts.append(v)
                output.verdict(v)
            if mismatches:
                result.summary.errors += 1
                for m in mismatches:
                    output.msg(f"{n}: {m}", level="error")
            else:
                result.summary.holds += 1
                output.msg(f"{n}: {SUMMARIES[n]}, matches")
    finally:
        output.end(result.summary)
    return result
