"""
Random and exhaustive building blocks for probes.

Random subsets include every element independently with probability 1/2 and are
redrawn while empty; a size cap keeps a random sample of the drawn elements.
"""

from itertools import combinations
from random import Random
from typing import Iterator, List, Optional, Sequence, Tuple

from pydantic import ConfigDict, Field
from pydantic.dataclasses import dataclass

from ..algebra import FiniteGroup, group_by_name
from ..masks import all_masks, is_subset
from ..search import group_catalog
from ..statement import Context

CONFIG = ConfigDict(extra="forbid", arbitrary_types_allowed=True)


def random_subset(
    rng: Random, elements: Sequence[int], max_size: Optional[int] = None
) -> List[int]:
    """
    >>> 1 <= len(random_subset(Random(1), range(6), max_size=2)) <= 2
    True
    """
    items = list(elements)
    if not items:
        raise ValueError("Cannot draw a nonempty subset of the empty set")
    while True:
        chosen = [a for a in items if rng.random() < 0.5]
        if chosen:
            break
    if max_size is not None and len(chosen) > max_size:
        chosen = sorted(rng.sample(chosen, max_size))
    return chosen


def small_subsets(elements: Sequence[int], max_size: int) -> Iterator[Tuple[int, ...]]:
    """All nonempty subsets with at most `max_size` elements, by size then index."""
    for size in range(1, max_size + 1):
        yield from combinations(elements, size)


def non_nested_pairs(k: int) -> Iterator[Tuple[int, int]]:
    """Pairs s < t of nonempty masks where neither contains the other."""
    masks = list(all_masks(k))
    for s, t in combinations(masks, 2):
        if not is_subset(s, t) and not is_subset(t, s):
            yield s, t


def pick_groups(
    names: Optional[List[str]],
    ctx: Context,
    max_order: int,
    abelian: Optional[bool],
) -> List[FiniteGroup]:
    """
    Explicit names win, then the scenario's structure, then the catalog up to
    `max_order` filtered by commutativity.
    """
    if names:
        groups = [group_by_name(n) for n in names]
    elif ctx.structure is not None:
        groups = [ctx.group()]
    else:
        groups = group_catalog(max_order)
    if abelian is not None:
        groups = [G for G in groups if G.is_abelian() == abelian]
    if not groups:
        raise ValueError("No group matches the probe's structure filter")
    return groups


@dataclass(config=CONFIG)
class Trials:
    trials: int = Field(default=1000, ge=1)
    exhaustive: bool = False

    def enumerate(self, ctx: Context) -> Iterator:
        raise ValueError(f"{type(self).__name__} has no exhaustive mode")
