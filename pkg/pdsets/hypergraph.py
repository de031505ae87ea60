"""
Subset families on [k], fractional coverings and compressions.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import (
    Dict,
    Iterator,
    List,
    Literal,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
    Union,
)

from . import settings
from .errors import (
    Infeasible,
    InvalidChain,
    NestedPair,
    NotACovering,
    NotRegular,
)
from .masks import (
    SubsetMask,
    check_mask,
    format_mask,
    full_mask,
    indices_of,
    is_subset,
    mask_of,
    parse_family,
    popcount,
)
from .simplex import maximize
from .utils import format_rational


@dataclass(frozen=True)
class SubsetFamily:
    """A multiset of nonempty subsets of [k]. Members are kept sorted."""

    k: int
    members: Tuple[SubsetMask, ...]

    def __post_init__(self):
        for m in self.members:
            check_mask(m, self.k)
        object.__setattr__(self, "members", tuple(sorted(self.members)))

    @classmethod
    def of(cls, k: int, members: Sequence[Sequence[int]]) -> "SubsetFamily":
        return cls(k, tuple(mask_of(m) for m in members))

    def __iter__(self) -> Iterator[SubsetMask]:
        return iter(self.members)

    def __len__(self) -> int:
        return len(self.members)

    def __str__(self) -> str:
        return " ".join(format_mask(m) for m in self.members)

    def degree(self, i: int) -> int:
        return degree(self, i)

    def degrees(self) -> Tuple[int, ...]:
        return degrees(self)


def family_from_string(text: str, k: Optional[int] = None) -> SubsetFamily:
    """
    >>> str(family_from_string("{2,3} {1,2}"))
    '{1,2} {2,3}'
    """
    members = parse_family(text)
    if k is None:
        k = max((max(indices_of(m)) for m in members if m), default=0)
    return SubsetFamily(k, members)


def singletons(k: int) -> SubsetFamily:
    return SubsetFamily(k, tuple(1 << i for i in range(k)))


def all_subsets_of_size(k: int, m: int) -> SubsetFamily:
    """C_m: all m-element subsets of [k]."""
    if not 1 <= m <= k:
        raise ValueError(f"Need 1 <= m <= k, got m={m}, k={k}")
    return SubsetFamily(
        k, tuple(mask_of(c) for c in combinations(range(1, k + 1), m))
    )


def leave_one_out(k: int) -> SubsetFamily:
    """All sets [k] \\ {i}. Needs k >= 2."""
    if k < 2:
        raise ValueError("The leave-one-out family needs k >= 2")
    full = full_mask(k)
    return SubsetFamily(k, tuple(full & ~(1 << i) for i in range(k)))


def degree(C: SubsetFamily, i: int) -> int:
    bit = 1 << (i - 1)
    return sum(1 for m in C.members if m & bit)


def degrees(C: SubsetFamily) -> Tuple[int, ...]:
    return tuple(degree(C, i) for i in range(1, C.k + 1))


def is_regular(C: SubsetFamily) -> Optional[int]:
    """The common degree r if every index has degree r, else None."""
    degs = set(degrees(C))
    if len(degs) == 1:
        return degs.pop()
    return None


# coverings ############################################################################

Weights = Union[Sequence[Fraction], Mapping[SubsetMask, Fraction]]


@dataclass(frozen=True)
class FractionalCovering:
    """Nonnegative weights, one per member (aligned with ``family.members``)."""

    family: SubsetFamily
    weights: Tuple[Fraction, ...]

    def __post_init__(self):
        if len(self.weights) != len(self.family):
            raise ValueError(
                f"{len(self.weights)} weights for {len(self.family)} members"
            )
        for m, w in zip(self.family.members, self.weights):
            if w < 0:
                raise ValueError(f"Weight of {format_mask(m)} is negative: {w}")
        for i, total in enumerate(self.coverage(), start=1):
            if total < 1:
                raise NotACovering(i, format_rational(total))

    @classmethod
    def of(cls, family: SubsetFamily, weights: Weights) -> "FractionalCovering":
        if isinstance(weights, Mapping):
            missing = [m for m in family.members if m not in weights]
            if missing:
                raise ValueError(f"No weight given for {format_mask(missing[0])}")
            values = tuple(Fraction(weights[m]) for m in family.members)
        else:
            values = tuple(Fraction(w) for w in weights)
        return cls(family, values)

    def coverage(self) -> Tuple[Fraction, ...]:
        totals = [Fraction(0)] * self.family.k
        for m, w in zip(self.family.members, self.weights):
            for i in indices_of(m):
                totals[i - 1] += w
        return tuple(totals)

    @property
    def is_partition(self) -> bool:
        return all(total == 1 for total in self.coverage())

    @property
    def total(self) -> Fraction:
        """c = Σ α_s"""
        return sum(self.weights, Fraction(0))

    def items(self) -> Iterator[Tuple[SubsetMask, Fraction]]:
        return zip(self.family.members, self.weights)

    def as_dict(self) -> Dict[str, str]:
        result: Dict[str, str] = {}
        for m, w in self.items():
            key = format_mask(m)
            while key in result:
                key += "'"
            result[key] = format_rational(w)
        return result


def regular_covering(C: SubsetFamily) -> FractionalCovering:
    """α_s = 1/r, a fractional partition."""
    r = is_regular(C)
    if r is None or r == 0:
        raise NotRegular(degrees(C))
    return FractionalCovering(C, tuple(Fraction(1, r) for _ in C.members))


def degree_covering(C: SubsetFamily) -> FractionalCovering:
    """α_s = 1 / min_{i∈s} r(i)"""
    degs = degrees(C)
    for i, d in enumerate(degs, start=1):
        if d == 0:
            raise Infeasible(i)
    weights = tuple(
        Fraction(1, min(degs[i - 1] for i in indices_of(m))) for m in C.members
    )
    return FractionalCovering(C, weights)


def min_covering_lp(C: SubsetFamily) -> FractionalCovering:
    """
    The covering of least total weight, found exactly through the dual packing
    problem ``max Σ y_i  s.t.  Σ_{i∈s} y_i <= 1``.
    """
    for i, d in enumerate(degrees(C), start=1):
        if d == 0:
            raise Infeasible(i)
    distinct = list(dict.fromkeys(C.members))
    A = [[int(bool(m & (1 << i))) for i in range(C.k)] for m in distinct]
    solution = maximize(A, [1] * len(distinct), [1] * C.k)
    best = dict(zip(distinct, solution.duals))
    weights = []
    for m in C.members:
        weights.append(best.pop(m, Fraction(0)))
    return FractionalCovering(C, tuple(weights))


# compressions #########################################################################


def compression_weight(A: SubsetFamily) -> int:
    """Σ |s|²"""
    return sum(popcount(m) ** 2 for m in A.members)


def is_nested(a: SubsetMask, b: SubsetMask) -> bool:
    return is_subset(a, b) or is_subset(b, a)


def is_chain(A: SubsetFamily) -> bool:
    return all(is_nested(a, b) for a, b in combinations(A.members, 2))


def compress_pair(A: SubsetFamily, first: SubsetMask, second: SubsetMask) -> SubsetFamily:
    """Replaces members `first` and `second` by their intersection and union."""
    if is_nested(first, second):
        raise NestedPair(format_mask(first), format_mask(second))
    rest = list(A.members)
    for m in (first, second):
        try:
            rest.remove(m)
        except ValueError:
            raise InvalidChain(f"{format_mask(m)} is not a member of {A}") from None
    inter, union = first & second, first | second
    rest.append(union)
    if inter:
        rest.append(inter)
    return SubsetFamily(A.k, tuple(rest))


def elementary_compression(A: SubsetFamily, i: int, j: int) -> SubsetFamily:
    """
    Compression of the members at positions i and j of ``A.members``.

    >>> A = family_from_string("{1,2} {2,3}")
    >>> str(elementary_compression(A, 0, 1))
    '{2} {1,2,3}'
    """
    if i == j:
        raise ValueError("A member cannot be compressed with itself")
    return compress_pair(A, A.members[i], A.members[j])


def minimal_multiset(A: SubsetFamily) -> SubsetFamily:
    """s_j = { i : i lies in at least j members }, j = 1 .. max degree."""
    degs = degrees(A)
    top = max(degs, default=0)
    members = []
    for j in range(1, top + 1):
        members.append(mask_of(i for i, d in enumerate(degs, start=1) if d >= j))
    return SubsetFamily(A.k, tuple(m for m in members if m))


class CompressionStep(NamedTuple):
    first: SubsetMask
    second: SubsetMask

    def __str__(self) -> str:
        return f"{format_mask(self.first)} ~ {format_mask(self.second)}"


class Domination(NamedTuple):
    status: Literal["yes", "no", "budget_exhausted"]
    steps: Tuple[CompressionStep, ...] = ()
    visited: int = 0


def replay(A: SubsetFamily, steps: Sequence[CompressionStep]) -> List[SubsetFamily]:
    """All families along a compression sequence, starting with A."""
    chain = [A]
    for step in steps:
        chain.append(compress_pair(chain[-1], step.first, step.second))
    return chain


def dominates(
    A: SubsetFamily, B: SubsetFamily, budget: Optional[int] = None
) -> Domination:
    """
    Breadth-first search for a sequence of elementary compressions turning A into B.

    Compressions keep every degree and strictly increase Σ|s|², so families heavier
    than B and families with another degree profile are never expanded.
    """
    budget = budget if budget is not None else settings.BFS_BUDGET
    if A.k != B.k:
        raise ValueError(f"Families live on [{A.k}] and [{B.k}]")
    if A == B:
        return Domination("yes", (), 1)
    target_weight = compression_weight(B)
    if (
        degrees(A) != degrees(B)
        or len(B) > len(A)
        or compression_weight(A) >= target_weight
    ):
        return Domination("no", (), 1)

    parents: Dict[SubsetFamily, Optional[Tuple[SubsetFamily, CompressionStep]]] = {
        A: None
    }
    queue = deque([A])
    while queue:
        current = queue.popleft()
        distinct = list(dict.fromkeys(current.members))
        for first, second in combinations(distinct, 2):
            if is_nested(first, second):
                continue
            step = CompressionStep(first, second)
            nxt = compress_pair(current, first, second)
            if nxt in parents:
                continue
            if compression_weight(nxt) > target_weight or len(nxt) < len(B):
                continue
            parents[nxt] = (current, step)
            if nxt == B:
                steps: List[CompressionStep] = []
                node: Optional[SubsetFamily] = nxt
                while node is not None and parents[node] is not None:
                    parent, s = parents[node]  # type: ignore[misc]
                    steps.append(s)
                    node = parent
                return Domination("yes", tuple(reversed(steps)), len(parents))
            if len(parents) >= budget:
                return Domination("budget_exhausted", (), len(parents))
            queue.append(nxt)
    return Domination("no", (), len(parents))
