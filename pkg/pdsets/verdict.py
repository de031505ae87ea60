from __future__ import annotations

from fractions import Fraction
from typing import Any, Dict, Literal, Mapping, Optional, Sequence, Tuple, Union

from pydantic import BaseModel, ConfigDict, field_serializer

from . import settings
from .hypergraph import FractionalCovering, SubsetFamily
from .pdfunc import (
    NEUTRAL,
    PAD,
    GroupElem,
    IntValue,
    RingElem,
    TupleValue,
    format_value,
    sorted_values,
)
from .utils import format_bits, format_rational, lcm_of_denominators

Status = Literal["holds", "violated", "inconclusive"]
Number = Union[int, float]

# JSON numbers above this are written as decimal strings
MAX_SAFE_INT = 2**53


def jsonable(value: Any) -> Any:
    """Converts witness data (fractions, sets, values, families) into JSON types."""
    if value is None or isinstance(value, (bool, str, float)):
        return value
    if isinstance(value, int):
        return value if abs(value) < MAX_SAFE_INT else str(value)
    if isinstance(value, Fraction):
        return format_rational(value)
    if isinstance(value, (GroupElem, RingElem, IntValue, TupleValue)):
        return format_value(value)
    if value is NEUTRAL or value is PAD:
        return str(value)
    if isinstance(value, SubsetFamily):
        return str(value)
    if isinstance(value, FractionalCovering):
        return value.as_dict()
    if isinstance(value, Mapping):
        return {str(jsonable(k)): jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        items = list(value)
        try:
            items = sorted(items)
        except TypeError:
            try:
                items = sorted_values(items)
            except (KeyError, TypeError):
                items = sorted(items, key=repr)
        return [jsonable(x) for x in items]
    if isinstance(value, (list, tuple)):
        return [jsonable(x) for x in value]
    return str(value)


class Verdict(BaseModel):
    """Outcome of checking one inequality instance."""

    model_config = ConfigDict(extra="forbid", frozen=True)

    statement: str
    status: Status
    exact: bool
    lhs: Number
    rhs: Number
    # always rhs - lhs, negative when violated
    margin: Number
    witness: Dict[str, Any] = {}
    note: str = ""
    seed: Optional[int] = None
    runtime_ms: float = 0.0

    @field_serializer("lhs", "rhs", "margin", when_used="json")
    def _big_ints_as_strings(self, value: Number) -> Union[str, float]:
        if isinstance(value, int):
            return str(value)
        return value

    @classmethod
    def exact_le(
        cls,
        statement: str,
        lhs: int,
        rhs: int,
        witness: Optional[Mapping[str, Any]] = None,
        note: str = "",
    ) -> "Verdict":
        """Exact big-integer comparison lhs <= rhs."""
        return cls(
            statement=statement,
            status="holds" if lhs <= rhs else "violated",
            exact=True,
            lhs=lhs,
            rhs=rhs,
            margin=rhs - lhs,
            witness=jsonable(dict(witness or {})),
            note=note,
        )

    @classmethod
    def entropy_le(
        cls,
        statement: str,
        lhs: float,
        rhs: float,
        witness: Optional[Mapping[str, Any]] = None,
        note: str = "",
        tolerance: Optional[float] = None,
        threshold: Optional[float] = None,
    ) -> "Verdict":
        """
        Float comparison lhs <= rhs in bits with a three-way outcome: a margin of at
        least ``-tolerance`` holds, below ``-threshold`` is violated, in between is
        inconclusive.
        """
        tolerance = settings.ENTROPY_TOLERANCE if tolerance is None else tolerance
        threshold = settings.VIOLATION_THRESHOLD if threshold is None else threshold
        margin = rhs - lhs
        status: Status
        if margin >= -tolerance:
            status = "holds"
        elif margin < -threshold:
            status = "violated"
        else:
            status = "inconclusive"
        return cls(
            statement=statement,
            status=status,
            exact=False,
            lhs=float(lhs),
            rhs=float(rhs),
            margin=float(margin),
            witness=jsonable(dict(witness or {})),
            note=note,
        )

    @property
    def holds(self) -> bool:
        return self.status == "holds"

    @property
    def violated(self) -> bool:
        return self.status == "violated"

    def with_run_info(
        self, seed: Optional[int] = None, runtime_ms: Optional[float] = None
    ) -> "Verdict":
        update: Dict[str, Any] = {}
        if seed is not None:
            update["seed"] = seed
        if runtime_ms is not None:
            update["runtime_ms"] = runtime_ms
        return self.model_copy(update=update)

    def relation(self) -> str:
        """``lhs <= rhs`` or ``lhs > rhs`` as printed in reports."""
        if self.exact:
            op = "<=" if self.lhs <= self.rhs else ">"
            return f"{self.lhs} {op} {self.rhs}"
        op = "<=" if self.status != "violated" else ">"
        return f"{format_bits(self.lhs)} {op} {format_bits(self.rhs)} bits"


def compare_powers(
    lhs: Sequence[Tuple[int, Fraction]],
    rhs: Sequence[Tuple[int, Fraction]],
) -> Tuple[int, int, int]:
    """
    Compares ``Π a^α`` against ``Π b^β`` for nonnegative rational exponents exactly,
    by raising both sides to the L-th power, L the lcm of all exponent denominators.

    Returns ``(lhs^L, rhs^L, L)``.

    >>> compare_powers([(4, Fraction(1, 2))], [(3, Fraction(1))])
    (4, 9, 2)
    """
    exps = [Fraction(e) for _, e in lhs] + [Fraction(e) for _, e in rhs]
    for e in exps:
        if e < 0:
            raise ValueError(f"Negative exponent {e}")
    L = lcm_of_denominators(exps)

    def side(factors: Sequence[Tuple[int, Fraction]]) -> int:
        result = 1
        for base, e in factors:
            power = Fraction(e) * L
            assert power.denominator == 1
            result *= base ** int(power)
        return result

    return side(lhs), side(rhs), L


def describe_margin(v: Verdict) -> str:
    if v.exact:
        return str(v.margin)
    return f"{format_bits(float(v.margin))} bits"