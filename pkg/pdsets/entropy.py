"""
Exact rational probability mass functions on finite product spaces.

Probabilities are ``Fraction``s; only the final entropy values are floats (bits).
Derived random variables are realized by exact pushforward, never by sampling.
"""

from __future__ import annotations

import math
import random
from collections import defaultdict
from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import (
    Dict,
    Hashable,
    Iterable,
    Mapping,
    NamedTuple,
    Optional,
    Sequence,
    Tuple,
)

from .errors import YNotInImage
from .masks import SubsetMask, full_mask, mask_of, project
from .pdfunc import GroundFamily, PDFunction, Value, sorted_values
from .utils import format_rational

Pmf = Dict[Hashable, Fraction]


def check_pmf(pmf: Mapping[Hashable, Fraction], what: str = "pmf") -> None:
    if not pmf:
        raise ValueError(f"{what} is empty")
    for key, p in pmf.items():
        if not isinstance(p, Fraction) and not isinstance(p, int):
            raise ValueError(f"{what}: mass of {key!r} is not an exact rational: {p!r}")
        if p <= 0:
            raise ValueError(f"{what}: mass of {key!r} is not positive: {p}")
    total = sum(pmf.values(), Fraction(0))
    if total != 1:
        raise ValueError(f"{what}: masses sum to {total}, not 1")


@dataclass(frozen=True)
class JointDistribution:
    """An exact pmf on X_1 × ... × X_k. Atoms with zero mass are left out."""

    supports: Tuple[Tuple[int, ...], ...]
    pmf: Mapping[Tuple[int, ...], Fraction]

    def __post_init__(self):
        k = len(self.supports)
        members = [set(s) for s in self.supports]
        for x in self.pmf:
            if len(x) != k:
                raise ValueError(f"Atom {x} does not have length {k}")
            for i, (a, allowed) in enumerate(zip(x, members), start=1):
                if a not in allowed:
                    raise ValueError(f"Atom {x}: {a} is outside the support of Z_{i}")
        check_pmf(self.pmf, "joint distribution")

    @property
    def k(self) -> int:
        return len(self.supports)

    @property
    def full(self) -> SubsetMask:
        return full_mask(self.k)

    def ground(self) -> GroundFamily:
        return GroundFamily(tuple(tuple(s) for s in self.supports))

    def atoms(self) -> Iterable[Tuple[Tuple[int, ...], Fraction]]:
        return self.pmf.items()


class Variable(NamedTuple):
    """
    A derived random variable: ``f_s(Z_s)`` if ``f`` is given, else the coordinate
    tuple ``Z_s``.
    """

    mask: SubsetMask
    f: Optional[PDFunction] = None

    def value(self, x: Tuple[int, ...], source: SubsetMask) -> Hashable:
        if self.f is None:
            return project(x, source, self.mask)
        return self.f.restrict(self.mask, x, source=source)


def coords(*indices: int) -> Variable:
    """The coordinates Z_i for the given (1-based) indices."""
    return Variable(mask_of(indices))


def fvar(f: PDFunction, mask: SubsetMask) -> Variable:
    return Variable(mask, f)


def joint_law(dist: JointDistribution, variables: Sequence[Variable]) -> Pmf:
    """Exact law of the tuple of the given derived variables."""
    result: Pmf = defaultdict(Fraction)
    full = dist.full
    for x, p in dist.atoms():
        key = tuple(v.value(x, full) for v in variables)
        result[key] += p
    return dict(result)


def pushforward(dist: JointDistribution, f: PDFunction, mask: SubsetMask) -> Pmf:
    """Exact law of f_s(Z_s)."""
    law = joint_law(dist, [Variable(mask, f)])
    return {key[0]: p for key, p in law.items()}


def entropy_of_pmf(pmf: Mapping[Hashable, Fraction]) -> float:
    total = 0.0
    for p in pmf.values():
        if p == 1:
            continue
        # -p log p = p (log d - log n), exact logs of big integers
        total += float(p) * (math.log2(p.denominator) - math.log2(p.numerator))
    return total


def entropy_bits(dist: JointDistribution, variables: Sequence[Variable]) -> float:
    """H of the joint law of the listed derived variables, in bits."""
    if not variables:
        raise ValueError("Entropy needs at least one variable")
    return entropy_of_pmf(joint_law(dist, variables))


def _entropy_or_zero(dist: JointDistribution, variables: Sequence[Variable]) -> float:
    if not variables:
        return 0.0
    return entropy_bits(dist, variables)


def conditional_entropy_bits(
    dist: JointDistribution,
    target: Sequence[Variable],
    given: Sequence[Variable] = (),
) -> float:
    """H(target | given) = H(target, given) - H(given)"""
    return entropy_bits(dist, [*target, *given]) - _entropy_or_zero(dist, given)


def mutual_information_bits(
    dist: JointDistribution,
    A: Sequence[Variable],
    B: Sequence[Variable],
    given: Sequence[Variable] = (),
) -> float:
    """I(A; B | G) = H(A, G) + H(B, G) - H(A, B, G) - H(G)"""
    return (
        entropy_bits(dist, [*A, *given])
        + entropy_bits(dist, [*B, *given])
        - entropy_bits(dist, [*A, *B, *given])
        - _entropy_or_zero(dist, given)
    )


def is_functionally_determined(
    dist: JointDistribution,
    target: Sequence[Variable],
    given: Sequence[Variable],
) -> bool:
    """
    Exact form of ``H(target | given) = 0``: on the support, every value of `given`
    comes with a single value of `target`.
    """
    seen: Dict[Hashable, Hashable] = {}
    full = dist.full
    for x, _ in dist.atoms():
        key = tuple(v.value(x, full) for v in given)
        value = tuple(v.value(x, full) for v in target)
        if seen.setdefault(key, value) != value:
            return False
    return True


# constructors #########################################################################


def uniform_on(elements: Iterable[Hashable]) -> Pmf:
    items = list(dict.fromkeys(elements))
    if not items:
        raise ValueError("Cannot build a uniform law on the empty set")
    p = Fraction(1, len(items))
    return {a: p for a in items}


def point_mass(element: Hashable) -> Pmf:
    return {element: Fraction(1)}


def product_distribution(marginals: Sequence[Mapping[int, Fraction]]) -> JointDistribution:
    """Law of independent Z_1, ..., Z_k with the given marginals."""
    if not marginals:
        raise ValueError("Need at least one marginal")
    for i, m in enumerate(marginals, start=1):
        check_pmf(m, f"marginal of Z_{i}")
    supports = tuple(tuple(sorted(m)) for m in marginals)
    pmf: Dict[Tuple[int, ...], Fraction] = {}
    for x in product(*supports):
        p = Fraction(1)
        for a, m in zip(x, marginals):
            p *= m[a]
        pmf[x] = p
    return JointDistribution(supports=supports, pmf=pmf)


def uniformizing_joint(
    f: PDFunction, image: Optional[Iterable[Value]] = None
) -> JointDistribution:
    """
    p(x) = 1 / (l * l_y) for x in f^{-1}(y), y in Y, where l = |Y| and
    l_y = |f^{-1}(y)|. The pushforward under f is exactly uniform on Y.
    Y defaults to the full image f(X_[k]).
    """
    fibers: Dict[Value, list] = defaultdict(list)
    for x in f.ground.tuples():
        fibers[f.full(x)].append(x)
    if image is None:
        targets = sorted_values(fibers)
    else:
        targets = sorted_values(set(image))
        for y in targets:
            if y not in fibers:
                raise YNotInImage(y)
    if not targets:
        raise ValueError("The target image is empty")
    l = len(targets)  # noqa: E741
    pmf: Dict[Tuple[int, ...], Fraction] = {}
    for y in targets:
        fiber = fibers[y]
        p = Fraction(1, l * len(fiber))
        for x in fiber:
            pmf[x] = p
    return JointDistribution(supports=f.ground.sets, pmf=pmf)


def random_marginal(rng: random.Random, support: Iterable[int]) -> Dict[int, Fraction]:
    """Numerators uniform in 1..100, normalized."""
    items = list(support)
    weights = [rng.randint(1, 100) for _ in items]
    total = sum(weights)
    return {a: Fraction(w, total) for a, w in zip(items, weights)}


def random_joint_distribution(
    rng: random.Random,
    supports: Sequence[Sequence[int]],
    sparsity: float = 0.0,
) -> JointDistribution:
    """
    A generally dependent joint law: every atom of the product gets a numerator in
    1..100, then each atom is dropped with probability `sparsity` (one always stays).
    """
    atoms = list(product(*supports))
    kept = [x for x in atoms if rng.random() >= sparsity]
    if not kept:
        kept = [rng.choice(atoms)]
    weights = [rng.randint(1, 100) for _ in kept]
    total = sum(weights)
    pmf = {x: Fraction(w, total) for x, w in zip(kept, weights)}
    return JointDistribution(supports=tuple(tuple(s) for s in supports), pmf=pmf)


def format_pmf(pmf: Mapping[Hashable, Fraction]) -> Dict[str, str]:
    """String keys and ``p/q`` values for reports."""
    return {str(key): format_rational(p) for key, p in pmf.items()}
