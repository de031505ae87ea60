"""
Functions on the disjoint union Q(X_1, ..., X_k) of all sub-products X_s, s ⊆ [k].

A value ``f_s(x)`` is requested with the mask of ``s`` and a tuple holding one element
per index of ``s`` in increasing index order. On the empty mask every function returns
``NEUTRAL``.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import product
from math import prod
from typing import (
    Callable,
    Dict,
    Iterable,
    Iterator,
    Literal,
    NamedTuple,
    Optional,
    Sequence,
    Set,
    Tuple,
    Union,
)

from . import settings
from .algebra import FiniteGroup, FiniteRing
from .errors import (
    BadArity,
    BudgetExceeded,
    ElementOutOfGround,
    EmptyMask,
    NotAbelian,
    YNotInImage,
)
from .masks import (
    SubsetMask,
    all_masks,
    check_mask,
    format_mask,
    full_mask,
    is_interval,
    popcount,
    positions_of,
    project,
)

# values ###############################################################################


@dataclass(frozen=True, slots=True)
class GroupElem:
    id: int

    def __str__(self) -> str:
        return f"g{self.id}"


@dataclass(frozen=True, slots=True)
class RingElem:
    id: int

    def __str__(self) -> str:
        return f"r{self.id}"


@dataclass(frozen=True, slots=True)
class IntValue:
    value: int

    def __str__(self) -> str:
        return str(self.value)


@dataclass(frozen=True, slots=True)
class TupleValue:
    items: Tuple["Value", ...]

    def __str__(self) -> str:
        return "(" + ", ".join(str(x) for x in self.items) + ")"


class _Marker:
    __slots__ = ("_name",)

    def __init__(self, name: str):
        self._name = name

    def __repr__(self) -> str:
        return self._name

    __str__ = __repr__


NEUTRAL = _Marker("Neutral")
PAD = _Marker("Pad")

Value = Union[GroupElem, RingElem, IntValue, TupleValue, _Marker]

_RANK = {_Marker: 0, IntValue: 1, GroupElem: 2, RingElem: 3, TupleValue: 4}


def value_sort_key(v: Value) -> tuple:
    """A total order on values, used to print and serialize sets deterministically."""
    rank = _RANK[type(v)]
    if isinstance(v, _Marker):
        return (rank, 0 if v is NEUTRAL else 1)
    if isinstance(v, TupleValue):
        return (rank, len(v.items), tuple(value_sort_key(x) for x in v.items))
    if isinstance(v, IntValue):
        return (rank, v.value)
    return (rank, v.id)


def sorted_values(values: Iterable[Value]) -> list:
    return sorted(values, key=value_sort_key)


def format_value(v: Value, structure: Union[FiniteGroup, FiniteRing, None] = None) -> str:
    if structure is not None and isinstance(v, (GroupElem, RingElem)):
        return structure.label(v.id)
    if isinstance(v, TupleValue):
        return "(" + ", ".join(format_value(x, structure) for x in v.items) + ")"
    return str(v)


# ground sets ##########################################################################


@dataclass(frozen=True)
class GroundFamily:
    """The ground sets X_1, ..., X_k, each a nonempty sorted tuple of element ids."""

    sets: Tuple[Tuple[int, ...], ...]

    def __post_init__(self):
        if not 1 <= len(self.sets) <= settings.K_MAX:
            raise ValueError(f"Need between 1 and {settings.K_MAX} ground sets")
        for i, s in enumerate(self.sets, start=1):
            if not s:
                raise ValueError(f"Ground set X_{i} is empty")

    @classmethod
    def of(cls, *sets: Iterable[int]) -> "GroundFamily":
        return cls(tuple(tuple(sorted(set(s))) for s in sets))

    @property
    def k(self) -> int:
        return len(self.sets)

    @property
    def full(self) -> SubsetMask:
        return full_mask(self.k)

    def sets_of(self, mask: SubsetMask) -> Tuple[Tuple[int, ...], ...]:
        return tuple(self.sets[p] for p in positions_of(mask))

    def size(self, mask: Optional[SubsetMask] = None) -> int:
        if mask is None:
            mask = self.full
        return prod(len(s) for s in self.sets_of(mask))

    def tuples(self, mask: Optional[SubsetMask] = None) -> Iterator[Tuple[int, ...]]:
        """X_s in lexicographic order of element ids."""
        if mask is None:
            mask = self.full
        return product(*self.sets_of(mask))

    def check_elements(self, structure_order: int) -> None:
        for i, s in enumerate(self.sets, start=1):
            for a in s:
                if not 0 <= a < structure_order:
                    raise ElementOutOfGround(i, a)


def check_budget(ground: GroundFamily, mask: Optional[SubsetMask], budget: int) -> None:
    needed = ground.size(mask)
    if needed > budget:
        raise BudgetExceeded(needed, budget)


# functions ############################################################################

Kind = Literal[
    "projection",
    "abelian_linear",
    "cartesian",
    "ring_product",
    "interval_nonabelian",
    "custom",
]
Evaluator = Callable[[SubsetMask, Tuple[int, ...]], Value]


class PDFunction:
    """
    A total function on Q(X_1, ..., X_k).

    The evaluator receives ``(mask, values)`` for nonempty masks only. Results are
    memoized; inserts are idempotent and stop once the memo holds ``MEMO_LIMIT``
    entries.
    """

    def __init__(
        self,
        ground: GroundFamily,
        evaluator: Evaluator,
        kind: Kind = "custom",
        name: str = "f",
        memoize: bool = True,
    ):
        self.ground = ground
        self.evaluator = evaluator
        self.kind = kind
        self.name = name
        self.memoize = memoize
        self._members = tuple(frozenset(s) for s in ground.sets)
        self._memo: Dict[Tuple[SubsetMask, Tuple[int, ...]], Value] = {}

    @property
    def k(self) -> int:
        return self.ground.k

    def __repr__(self) -> str:
        return f"PDFunction({self.name!r}, kind={self.kind!r}, k={self.k})"

    def eval(self, mask: SubsetMask, values: Sequence[int]) -> Value:
        check_mask(mask, self.k, allow_empty=True)
        values = tuple(values)
        positions = positions_of(mask)
        if len(values) != len(positions):
            raise BadArity(len(positions), len(values))
        for pos, v in zip(positions, values):
            if v not in self._members[pos]:
                raise ElementOutOfGround(pos + 1, v)
        if not mask:
            return NEUTRAL
        if not self.memoize:
            return self.evaluator(mask, values)
        key = (mask, values)
        try:
            return self._memo[key]
        except KeyError:
            pass
        result = self.evaluator(mask, values)
        if len(self._memo) < settings.MEMO_LIMIT:
            self._memo[key] = result
        return result

    __call__ = eval

    def full(self, x: Sequence[int]) -> Value:
        return self.eval(self.ground.full, x)

    def restrict(self, mask: SubsetMask, x: Sequence[int], source: Optional[int] = None):
        """f_s of the point ``x`` laid out over ``source`` (default: all of [k])."""
        if source is None:
            source = self.ground.full
        return self.eval(mask, project(x, source, mask))

    def unmemoized(self) -> "PDFunction":
        return PDFunction(
            self.ground, self.evaluator, kind=self.kind, name=self.name, memoize=False
        )

    def with_ground(self, ground: GroundFamily) -> "PDFunction":
        return PDFunction(ground, self.evaluator, kind=self.kind, name=self.name)


# decision procedures ##################################################################


class PDWitness(NamedTuple):
    s: SubsetMask
    x: Tuple[int, ...]
    y: Tuple[int, ...]
    fx: Value
    fy: Value
    direction: str = ""

    def __str__(self) -> str:
        text = (
            f"s={format_mask(self.s)}: x={self.x}, y={self.y} agree on the parts but "
            f"f(x)={self.fx} != f(y)={self.fy}"
        )
        if self.direction:
            text += f" ({self.direction})"
        return text


class Determination(NamedTuple):
    holds: bool
    witness: Optional[PDWitness] = None

    def __bool__(self) -> bool:
        return self.holds


def is_partition_determined(
    f: PDFunction,
    C: Iterable[SubsetMask],
    budget: Optional[int] = None,
) -> Determination:
    """
    f(x) is recoverable from (f_s(x), f_s̄(x)) for every s in C.
    Exhaustive over X_[k].
    """
    budget = budget if budget is not None else settings.TUPLE_BUDGET
    k = f.k
    full = f.ground.full
    check_budget(f.ground, full, budget)
    points = list(f.ground.tuples())
    values = {x: f.full(x) for x in points}
    for s in dict.fromkeys(C):
        check_mask(s, k, allow_empty=True)
        sbar = full & ~s
        seen: Dict[Tuple[Value, Value], Tuple[int, ...]] = {}
        for x in points:
            key = (f.restrict(s, x), f.restrict(sbar, x))
            other = seen.setdefault(key, x)
            if values[other] != values[x]:
                return Determination(
                    False, PDWitness(s, other, x, values[other], values[x])
                )
    return Determination(True)


def disjoint_pairs(k: int) -> Iterator[Tuple[SubsetMask, SubsetMask]]:
    """All ordered pairs of disjoint nonempty subsets of [k]."""
    for s in all_masks(k):
        rest = full_mask(k) & ~s
        t = rest
        while t:
            yield s, t
            t = (t - 1) & rest


def is_strongly_partition_determined(
    f: PDFunction, budget: Optional[int] = None
) -> Determination:
    """
    For all disjoint nonempty s, t:

    * (f_t, f_{s∪t}) determines f_s, and
    * (f_s, f_t) determines f_{s∪t}.

    The witness names the direction that fails.
    """
    budget = budget if budget is not None else settings.TUPLE_BUDGET
    check_budget(f.ground, f.ground.full, budget)
    for s, t in disjoint_pairs(f.k):
        u = s | t
        first: Dict[Tuple[Value, Value], Tuple[Tuple[int, ...], Value]] = {}
        second: Dict[Tuple[Value, Value], Tuple[Tuple[int, ...], Value]] = {}
        for x in f.ground.tuples(u):
            fs = f.restrict(s, x, source=u)
            ft = f.restrict(t, x, source=u)
            fu = f.eval(u, x)

            # points x, y of the witnesses range over X_{s∪t}
            y, fs_y = first.setdefault((ft, fu), (x, fs))
            if fs_y != fs:
                why = f"f_t and f_s∪t do not fix f_s, t={format_mask(t)}"
                return Determination(False, PDWitness(s, y, x, fs_y, fs, why))
            y, fu_y = second.setdefault((fs, ft), (x, fu))
            if fu_y != fu:
                why = f"f_s and f_t do not fix f_s∪t, s={format_mask(s)}"
                return Determination(False, PDWitness(u, y, x, fu_y, fu, why))
    return Determination(True)


# compound sets ########################################################################


def compound_image(f: PDFunction, mask: SubsetMask, budget: Optional[int] = None) -> Set:
    """f_s(X_s) by enumeration."""
    if not mask:
        raise EmptyMask()
    check_mask(mask, f.k)
    budget = budget if budget is not None else settings.TUPLE_BUDGET
    check_budget(f.ground, mask, budget)
    return {f.eval(mask, x) for x in f.ground.tuples(mask)}


def compound_preimage(
    f: PDFunction,
    mask: SubsetMask,
    Y: Iterable[Value],
    budget: Optional[int] = None,
) -> Set[Tuple[int, ...]]:
    """All x in X_s with f_s(x) in Y. Every member of Y must be attained."""
    check_mask(mask, f.k, allow_empty=True)
    budget = budget if budget is not None else settings.TUPLE_BUDGET
    check_budget(f.ground, mask, budget)
    wanted = set(Y)
    found: Set[Tuple[int, ...]] = set()
    attained: Set = set()
    for x in f.ground.tuples(mask):
        value = f.eval(mask, x)
        if value in wanted:
            found.add(x)
            attained.add(value)
    for y in sorted_values(wanted - attained):
        raise YNotInImage(y)
    return found


def section_image(
    f: PDFunction,
    points: Iterable[Tuple[int, ...]],
    mask: SubsetMask,
    source: Optional[SubsetMask] = None,
) -> Set:
    """{ f_s(π_s(x)) : x in points }"""
    return {f.restrict(mask, x, source=source) for x in points}


# built-in functions ###################################################################


def builtin_abelian_linear(
    G: FiniteGroup, ground: GroundFamily, coeffs: Optional[Sequence[int]] = None
) -> PDFunction:
    """f_s(x) = Σ_{i∈s} c_i x_i, integer coefficients as repeated addition."""
    if not G.is_abelian():
        raise NotAbelian(G.name)
    ground.check_elements(G.order)
    c = tuple(coeffs) if coeffs is not None else (1,) * ground.k
    if len(c) != ground.k:
        raise BadArity(ground.k, len(c))
    table = G.table

    def evaluate(mask: SubsetMask, values: Tuple[int, ...]) -> Value:
        acc = G.identity
        for pos, v in zip(positions_of(mask), values):
            acc = table[acc][G.multiple(v, c[pos])]
        return GroupElem(acc)

    unit = all(x == 1 for x in c)
    name = "sum" if unit else "linear" + str(list(c))
    return PDFunction(ground, evaluate, kind="abelian_linear", name=f"{name}@{G.name}")


def builtin_sum(G: FiniteGroup, ground: GroundFamily) -> PDFunction:
    return builtin_abelian_linear(G, ground)


def builtin_projection(ground: GroundFamily) -> PDFunction:
    def evaluate(mask: SubsetMask, values: Tuple[int, ...]) -> Value:
        return TupleValue(tuple(IntValue(v) for v in values))

    return PDFunction(ground, evaluate, kind="projection", name="projection")


def builtin_cartesian(ground: GroundFamily) -> PDFunction:
    """Σ_{i∈s} x_i v_i with v_i the i-th unit vector: x_i in slot i, 0 elsewhere."""
    k = ground.k

    def evaluate(mask: SubsetMask, values: Tuple[int, ...]) -> Value:
        slots = [IntValue(0)] * k
        for pos, v in zip(positions_of(mask), values):
            slots[pos] = IntValue(v)
        return TupleValue(tuple(slots))

    return PDFunction(ground, evaluate, kind="cartesian", name="cartesian")


def _ordered_product(table, start: int, values: Iterable[int]) -> int:
    acc = start
    for v in values:
        acc = table[acc][v]
    return acc


def builtin_ring_product(R: FiniteRing, ground: GroundFamily) -> PDFunction:
    """f_s(x) = x_{i_1} x_{i_2} ... in increasing index order."""
    ground.check_elements(R.order)
    mul = R.mul

    def evaluate(mask: SubsetMask, values: Tuple[int, ...]) -> Value:
        return RingElem(_ordered_product(mul, values[0], values[1:]))

    return PDFunction(ground, evaluate, kind="ring_product", name=f"product@{R.name}")


def builtin_ordered_product(G: FiniteGroup, ground: GroundFamily) -> PDFunction:
    """x_{i_1} + x_{i_2} + ... for every s, in a possibly non-abelian group."""
    ground.check_elements(G.order)

    def evaluate(mask: SubsetMask, values: Tuple[int, ...]) -> Value:
        return GroupElem(_ordered_product(G.table, G.identity, values))

    return PDFunction(ground, evaluate, kind="custom", name=f"ordered-sum@{G.name}")


def builtin_interval_g(G: FiniteGroup, ground: GroundFamily) -> PDFunction:
    """
    The ordered sum on masks forming an interval of [k]. On every other mask the
    tuple (y_1, ..., y_k) with y_i = x_i on s and ``PAD`` off s.
    """
    ground.check_elements(G.order)
    k = ground.k

    def evaluate(mask: SubsetMask, values: Tuple[int, ...]) -> Value:
        if is_interval(mask):
            return GroupElem(_ordered_product(G.table, G.identity, values))
        slots: list = [PAD] * k
        for pos, v in zip(positions_of(mask), values):
            slots[pos] = GroupElem(v)
        return TupleValue(tuple(slots))

    return PDFunction(
        ground, evaluate, kind="interval_nonabelian", name=f"interval-sum@{G.name}"
    )


def builtin_collapsing(ground: GroundFamily) -> PDFunction:
    """Neutral on masks of size <= 1, the full coordinate tuple otherwise."""

    def evaluate(mask: SubsetMask, values: Tuple[int, ...]) -> Value:
        if popcount(mask) <= 1:
            return NEUTRAL
        return TupleValue(tuple(IntValue(v) for v in values))

    return PDFunction(ground, evaluate, kind="custom", name="collapsing")


def custom_function(
    ground: GroundFamily, evaluator: Evaluator, name: str = "custom"
) -> PDFunction:
    return PDFunction(ground, evaluator, kind="custom", name=name)
