"""
Field types and helpers for scenario files.

Element lists may mix carrier indices and labels (``[e, R^2F]``); labels are resolved
against the scenario's structure when a statement runs.
"""

from fractions import Fraction
from typing import (
    Annotated,
    Any,
    Dict,
    Iterable,
    List,
    Literal,
    Mapping,
    Optional,
    Set,
    Tuple,
    TypeVar,
    Union,
)

from pydantic import ConfigDict
from pydantic.dataclasses import dataclass
from pydantic.functional_validators import BeforeValidator

from .entropy import JointDistribution
from .hypergraph import (
    FractionalCovering,
    SubsetFamily,
    all_subsets_of_size,
    degree_covering,
    family_from_string,
    leave_one_out,
    min_covering_lp,
    regular_covering,
    singletons,
)
from .masks import SubsetMask, mask_of, parse_mask
from .utils import parse_rational


def islist(x):
    return isinstance(x, Iterable) and not isinstance(x, (str, bytes, Mapping))


def _flatten(items):
    for x in items:
        if islist(x):
            yield from _flatten(x)
        else:
            yield x


def flatten(x: Any):
    if x is None:
        return []
    if not islist(x):
        x = (x,)
    return list(_flatten(x))


T = TypeVar("T")
FlatList = Annotated[List[T], BeforeValidator(flatten)]
FlatSet = Annotated[Set[T], BeforeValidator(flatten)]


def to_rational(value: Any) -> Fraction:
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, (int, str, Fraction)):
        return parse_rational(value)
    raise ValueError(f"Not an exact rational number: {value!r} (write it as p/q)")


def to_mask(value: Any) -> SubsetMask:
    """
    ``"{1,3}"``, ``[1, 3]``, the YAML mapping ``{1, 3}`` or a bitmask integer.

    >>> to_mask("{1,3}"), to_mask([2, 3]), to_mask({1: None, 2: None}), to_mask(6)
    (5, 6, 3, 6)
    """
    if isinstance(value, str):
        return parse_mask(value)
    if isinstance(value, int) and not isinstance(value, bool):
        if value < 0:
            raise ValueError(f"Not a subset of [k]: {value}")
        return value
    if isinstance(value, Mapping):
        return mask_of(int(x) for x in value)
    if islist(value):
        return mask_of(int(x) for x in value)
    raise ValueError(f"Not a subset of [k]: {value!r}")


Element = Union[int, str]
Rational = Annotated[Fraction, BeforeValidator(to_rational)]
Mask = Annotated[SubsetMask, BeforeValidator(to_mask)]
ElementList = FlatList[Element]

NAMED_FAMILIES = ("singletons", "pairs", "leave-one-out")


def build_family(spec: Union[str, List[List[int]]], k: int) -> SubsetFamily:
    """
    A family from a literal like ``"{1,2} {2,3}"``, a list of index lists or one of
    the names ``singletons``, ``pairs``, ``leave-one-out``.

    >>> str(build_family("leave-one-out", 3))
    '{1,2} {1,3} {2,3}'
    """
    if isinstance(spec, str):
        name = spec.strip().lower()
        if name == "singletons":
            return singletons(k)
        if name == "pairs":
            return all_subsets_of_size(k, 2)
        if name == "leave-one-out":
            return leave_one_out(k)
        return family_from_string(spec, k)
    return SubsetFamily.of(k, spec)


WeightRule = Literal["regular", "degree", "lp"]


@dataclass(config=ConfigDict(extra="forbid", arbitrary_types_allowed=True))
class CoveringSpec:
    family: Union[str, List[List[int]]]
    weights: Union[WeightRule, List[Rational], Dict[str, Rational]] = "lp"

    def build(self, k: int) -> FractionalCovering:
        C = build_family(self.family, k)
        if self.weights == "regular":
            return regular_covering(C)
        if self.weights == "degree":
            return degree_covering(C)
        if self.weights == "lp":
            return min_covering_lp(C)
        if isinstance(self.weights, dict):
            return FractionalCovering.of(
                C, {parse_mask(key): w for key, w in self.weights.items()}
            )
        return FractionalCovering.of(C, list(self.weights))


def covering_from_value(value: Any) -> Any:
    # a bare family string means the optimal covering of that family
    if isinstance(value, str) or islist(value):
        return {"family": value}
    return value


Covering = Annotated[CoveringSpec, BeforeValidator(covering_from_value)]


def parse_atom(text: Any) -> Tuple[int, ...]:
    """
    >>> parse_atom("0 1 1"), parse_atom("2,0"), parse_atom(3)
    ((0, 1, 1), (2, 0), (3,))
    """
    if isinstance(text, int):
        return (text,)
    parts = str(text).replace(",", " ").split()
    if not parts:
        raise ValueError("Empty atom in distribution")
    return tuple(int(p) for p in parts)


def build_distribution(
    pmf: Mapping[Any, Fraction],
    supports: Optional[List[List[int]]] = None,
) -> JointDistribution:
    """A joint law from ``{"0 1 1": 1/4, ...}``; supports default to the atoms' values."""
    atoms = {parse_atom(key): Fraction(p) for key, p in pmf.items()}
    if not atoms:
        raise ValueError("Distribution has no atoms")
    if supports is None:
        k = len(next(iter(atoms)))
        columns: List[Set[int]] = [set() for _ in range(k)]
        for x in atoms:
            if len(x) != k:
                raise ValueError(f"Atom {x} does not have length {k}")
            for col, a in zip(columns, x):
                col.add(a)
        support_tuples = tuple(tuple(sorted(c)) for c in columns)
    else:
        support_tuples = tuple(tuple(s) for s in supports)
    return JointDistribution(supports=support_tuples, pmf=atoms)


@dataclass(config=ConfigDict(extra="forbid", arbitrary_types_allowed=True))
class DistributionSpec:
    pmf: Dict[str, Rational]
    supports: Optional[List[List[int]]] = None

    def build(self) -> JointDistribution:
        return build_distribution(self.pmf, self.supports)


def distribution_from_value(value: Any) -> Any:
    # allow the pmf mapping directly
    if isinstance(value, Mapping) and "pmf" not in value:
        return {"pmf": {str(k): v for k, v in value.items()}}
    return value


Distribution = Annotated[DistributionSpec, BeforeValidator(distribution_from_value)]

Marginals = Union[Literal["uniform"], List[Dict[Element, Rational]]]
