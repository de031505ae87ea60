import math
import os
import re
from dataclasses import dataclass
from fractions import Fraction
from pathlib import Path
from typing import Any, Iterable, Union

from rich.markup import escape as rich_escape

RATIONAL_REGEX = re.compile(r"^\s*(?P<num>[+-]?\d+)\s*(?:/\s*(?P<den>\d+))?\s*$")


def escape(msg: Any) -> str:
    return rich_escape(str(msg))


def expandvars(path: Union[str, Path]) -> Path:
    return Path(os.path.expandvars(path)).expanduser()


def parse_rational(value: Union[str, int, float, Fraction]) -> Fraction:
    """
    Parses exact rationals: ``3``, ``"1/2"``, ``" -4 / 6 "``.

    Floats are accepted only if they are integral, everything else must be given as a
    fraction string.

    >>> parse_rational("2/4")
    Fraction(1, 2)
    """
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise ValueError(f"Not a rational number: {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, float):
        if value.is_integer():
            return Fraction(int(value))
        raise ValueError(f'Give non-integral rationals as strings ("p/q"), got {value}')
    match = RATIONAL_REGEX.match(str(value))
    if not match:
        raise ValueError(f"Not a rational number: {value!r}")
    den = int(match["den"]) if match["den"] is not None else 1
    if den == 0:
        raise ValueError(f"Zero denominator in {value!r}")
    return Fraction(int(match["num"]), den)


def format_rational(value: Fraction) -> str:
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def lcm_of_denominators(values: Iterable[Fraction]) -> int:
    result = 1
    for v in values:
        result = math.lcm(result, v.denominator)
    return result


def format_bits(value: float) -> str:
    return f"{value:.9f}"


@dataclass
class ReportSummary:
    holds: int = 0
    violated: int = 0
    inconclusive: int = 0
    errors: int = 0

    def __add__(self, other: "ReportSummary") -> "ReportSummary":
        return ReportSummary(
            holds=self.holds + other.holds,
            violated=self.violated + other.violated,
            inconclusive=self.inconclusive + other.inconclusive,
            errors=self.errors + other.errors,
        )

    def count(self, status: str) -> None:
        setattr(self, status, getattr(self, status) + 1)

    def exit_code(self) -> int:
        if self.errors:
            return 1
        if self.violated:
            return 2
        return 0
