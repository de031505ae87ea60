"""
Subsets of the index set [k] = {1, ..., k} are stored as integer bitmasks.

Bit ``i - 1`` is set iff index ``i`` belongs to the subset.

>>> format_mask(mask_of([1, 3]))
'{1,3}'
>>> indices_of(parse_mask("{2, 3}"))
(2, 3)
"""

import re
from typing import Iterable, Iterator, Sequence, Tuple

from .errors import EmptyMask
from .settings import K_MAX

SubsetMask = int

MASK_REGEX = re.compile(r"\{([^{}]*)\}")


def mask_of(indices: Iterable[int]) -> SubsetMask:
    mask = 0
    for i in indices:
        if not 1 <= i <= K_MAX:
            raise ValueError(f"Index {i} is outside of 1..{K_MAX}")
        mask |= 1 << (i - 1)
    return mask


def indices_of(mask: SubsetMask) -> Tuple[int, ...]:
    result = []
    i = 1
    while mask:
        if mask & 1:
            result.append(i)
        mask >>= 1
        i += 1
    return tuple(result)


def positions_of(mask: SubsetMask) -> Tuple[int, ...]:
    """zero-based positions of the set bits"""
    return tuple(i - 1 for i in indices_of(mask))


def popcount(mask: SubsetMask) -> int:
    return bin(mask).count("1")


def full_mask(k: int) -> SubsetMask:
    if not 0 <= k <= K_MAX:
        raise ValueError(f"k must be in 0..{K_MAX}, got {k}")
    return (1 << k) - 1


def complement(mask: SubsetMask, k: int) -> SubsetMask:
    return full_mask(k) & ~mask


def is_subset(a: SubsetMask, b: SubsetMask) -> bool:
    return a & b == a


def check_mask(mask: SubsetMask, k: int, allow_empty: bool = False) -> SubsetMask:
    if mask & ~full_mask(k):
        raise ValueError(f"{format_mask(mask)} is not a subset of [{k}]")
    if not mask and not allow_empty:
        raise EmptyMask()
    return mask


def submasks(mask: SubsetMask) -> Iterator[SubsetMask]:
    """All submasks of `mask`, the empty one included, in decreasing order."""
    sub = mask
    while True:
        yield sub
        if sub == 0:
            return
        sub = (sub - 1) & mask


def all_masks(k: int, nonempty: bool = True) -> Iterator[SubsetMask]:
    start = 1 if nonempty else 0
    yield from range(start, full_mask(k) + 1)


def is_interval(mask: SubsetMask) -> bool:
    """True iff the set bits are consecutive (nonempty)."""
    if not mask:
        return False
    low = mask & -mask
    shifted = mask // low
    return shifted & (shifted + 1) == 0


def project(values: Sequence, source: SubsetMask, target: SubsetMask) -> tuple:
    """
    Restricts a tuple laid out over the indices of `source` to the indices of
    `target` (which must be a submask).

    >>> project((7, 8, 9), mask_of([1, 2, 3]), mask_of([1, 3]))
    (7, 9)
    """
    src = indices_of(source)
    wanted = set(indices_of(target))
    return tuple(v for i, v in zip(src, values) if i in wanted)


def format_mask(mask: SubsetMask) -> str:
    return "{" + ",".join(str(i) for i in indices_of(mask)) + "}"


def parse_mask(text: str) -> SubsetMask:
    """Parses ``{1,2}``, ``{1 2}`` or a bare ``1,2``. ``{}`` is the empty mask."""
    text = text.strip()
    match = MASK_REGEX.fullmatch(text)
    inner = match.group(1) if match else text
    parts = [p for p in re.split(r"[\s,]+", inner.strip()) if p]
    try:
        return mask_of(int(p) for p in parts)
    except ValueError as e:
        raise ValueError(f'Invalid subset "{text}": {e}') from e


def parse_family(text: str) -> Tuple[SubsetMask, ...]:
    """
    >>> [format_mask(m) for m in parse_family("{1,2} {2,3}")]
    ['{1,2}', '{2,3}']
    """
    found = MASK_REGEX.findall(text)
    rest = MASK_REGEX.sub("", text).strip()
    if rest:
        raise ValueError(f'Unexpected text "{rest}" in family "{text}"')
    return tuple(parse_mask("{" + inner + "}") for inner in found)
