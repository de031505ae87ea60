"""
Finite groups and rings given by their operation tables.

The carrier of every structure is ``{0, ..., order - 1}``; all algebra is table
lookups. Tables from untrusted sources (files, scenarios) are validated exhaustively,
the named constructors build their tables by construction.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import reduce
from itertools import product
from pathlib import Path
from typing import Dict, Iterable, List, Optional, Sequence, Set, Tuple

from .errors import (
    BadTableShape,
    EmptyOperand,
    InvalidModulus,
    NoIdentity,
    NoInverse,
    NotAbelianGroup,
    NotAssociative,
    NotClosed,
    NotDistributive,
    TableParseError,
    TooLargeToValidate,
    UnknownStructure,
)
from .settings import ASSOCIATIVITY_CHECK_LIMIT

Table = Tuple[Tuple[int, ...], ...]
ElementId = int


@dataclass(frozen=True)
class FiniteGroup:
    order: int
    table: Table = field(repr=False)
    identity: ElementId
    inverse: Tuple[ElementId, ...] = field(repr=False)
    name: str = "G"
    labels: Optional[Tuple[str, ...]] = field(default=None, repr=False, compare=False)

    def op(self, a: ElementId, b: ElementId) -> ElementId:
        return self.table[a][b]

    def inv(self, a: ElementId) -> ElementId:
        return self.inverse[a]

    def multiple(self, a: ElementId, n: int) -> ElementId:
        """``a + a + ... + a`` (n times); negative n uses the inverse."""
        if n < 0:
            a, n = self.inverse[a], -n
        result, base = self.identity, a
        while n:
            if n & 1:
                result = self.table[result][base]
            base = self.table[base][base]
            n >>= 1
        return result

    @property
    def elements(self) -> range:
        return range(self.order)

    def is_abelian(self) -> bool:
        return is_abelian(self)

    def label(self, a: ElementId) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)

    def element_by_label(self, text: str) -> ElementId:
        if self.labels is not None and text in self.labels:
            return self.labels.index(text)
        try:
            value = int(text)
        except ValueError:
            raise ValueError(f'"{text}" is not an element of {self.name}') from None
        if not 0 <= value < self.order:
            raise ValueError(f"{value} is not an element of {self.name}")
        return value


@dataclass(frozen=True)
class FiniteRing:
    order: int
    add: Table = field(repr=False)
    neg: Tuple[ElementId, ...] = field(repr=False)
    zero: ElementId
    mul: Table = field(repr=False)
    commutative_mul: bool
    name: str = "R"
    labels: Optional[Tuple[str, ...]] = field(default=None, repr=False, compare=False)

    def plus(self, a: ElementId, b: ElementId) -> ElementId:
        return self.add[a][b]

    def times(self, a: ElementId, b: ElementId) -> ElementId:
        return self.mul[a][b]

    def multiple(self, a: ElementId, n: int) -> ElementId:
        return self.additive_group().multiple(a, n)

    def power(self, a: ElementId, n: int) -> ElementId:
        if n < 1:
            raise ValueError(f"Exponent must be a positive integer, got {n}")
        result = a
        for _ in range(n - 1):
            result = self.mul[result][a]
        return result

    def additive_group(self) -> FiniteGroup:
        return FiniteGroup(
            order=self.order,
            table=self.add,
            identity=self.zero,
            inverse=self.neg,
            name=f"({self.name},+)",
            labels=self.labels,
        )

    @property
    def elements(self) -> range:
        return range(self.order)

    def label(self, a: ElementId) -> str:
        if self.labels is not None:
            return self.labels[a]
        return str(a)


def _freeze(rows: Sequence[Sequence[int]]) -> Table:
    return tuple(tuple(row) for row in rows)


def _check_shape(order: int, table: Sequence[Sequence[int]]) -> Table:
    if order < 1:
        raise BadTableShape(order, "order must be positive")
    if len(table) != order:
        raise BadTableShape(order, f"{len(table)} rows")
    for r, row in enumerate(table):
        if len(row) != order:
            raise BadTableShape(order, f"row {r} has {len(row)} entries")
        for c, value in enumerate(row):
            if not isinstance(value, int) or isinstance(value, bool):
                raise NotClosed(r, c, value, order)
            if not 0 <= value < order:
                raise NotClosed(r, c, value, order)
    return _freeze(table)


def _find_identity(table: Table, name: str = "op") -> ElementId:
    n = len(table)
    for e in range(n):
        if all(table[e][a] == a and table[a][e] == a for a in range(n)):
            return e
    raise NoIdentity(name)


def _inverses(table: Table, identity: ElementId) -> Tuple[ElementId, ...]:
    n = len(table)
    result = []
    for a in range(n):
        for b in range(n):
            if table[a][b] == identity and table[b][a] == identity:
                result.append(b)
                break
        else:
            raise NoInverse(a)
    return tuple(result)


def _check_associative(table: Table, name: str = "op") -> None:
    n = len(table)
    for a, b, c in product(range(n), repeat=3):
        if table[table[a][b]][c] != table[a][table[b][c]]:
            raise NotAssociative(a, b, c, table=name)


def group_from_table(
    order: int,
    table: Sequence[Sequence[int]],
    name: str = "G",
    labels: Optional[Sequence[str]] = None,
    trusted: bool = False,
) -> FiniteGroup:
    """
    Validates a Cayley table and derives identity and inverses.

    >>> group_from_table(1, [[0]]).identity
    0
    """
    frozen = _check_shape(order, table)
    identity = _find_identity(frozen)
    inverse = _inverses(frozen, identity)
    if not trusted:
        if order > ASSOCIATIVITY_CHECK_LIMIT:
            raise TooLargeToValidate(order, ASSOCIATIVITY_CHECK_LIMIT)
        _check_associative(frozen)
    return FiniteGroup(
        order=order,
        table=frozen,
        identity=identity,
        inverse=inverse,
        name=name,
        labels=tuple(labels) if labels is not None else None,
    )


def ring_from_tables(
    order: int,
    add: Sequence[Sequence[int]],
    mul: Sequence[Sequence[int]],
    name: str = "R",
    labels: Optional[Sequence[str]] = None,
    trusted: bool = False,
) -> FiniteRing:
    add_t = _check_shape(order, add)
    mul_t = _check_shape(order, mul)
    zero = _find_identity(add_t, "add")
    neg = _inverses(add_t, zero)
    for a in range(order):
        for b in range(a + 1, order):
            if add_t[a][b] != add_t[b][a]:
                raise NotAbelianGroup(a, b)
    if not trusted:
        if order > ASSOCIATIVITY_CHECK_LIMIT:
            raise TooLargeToValidate(order, ASSOCIATIVITY_CHECK_LIMIT)
        _check_associative(add_t, "add")
        _check_associative(mul_t, "mul")
        for a, b, c in product(range(order), repeat=3):
            if mul_t[a][add_t[b][c]] != add_t[mul_t[a][b]][mul_t[a][c]]:
                raise NotDistributive(a, b, c, "left")
            if mul_t[add_t[a][b]][c] != add_t[mul_t[a][c]][mul_t[b][c]]:
                raise NotDistributive(a, b, c, "right")
    commutative = all(
        mul_t[a][b] == mul_t[b][a] for a in range(order) for b in range(a + 1, order)
    )
    return FiniteRing(
        order=order,
        add=add_t,
        neg=neg,
        zero=zero,
        mul=mul_t,
        commutative_mul=commutative,
        name=name,
        labels=tuple(labels) if labels is not None else None,
    )


# named constructors ###################################################################


def cyclic_group(n: int) -> FiniteGroup:
    """
    >>> cyclic_group(5).op(3, 4)
    2
    """
    if n < 1:
        raise InvalidModulus(n, "order must be at least 1")
    table = [[(a + b) % n for b in range(n)] for a in range(n)]
    return group_from_table(n, table, name=f"Z{n}", trusted=True)


def _dihedral_labels(n: int) -> List[str]:
    def rot(a: int) -> str:
        if a == 0:
            return ""
        return "R" if a == 1 else f"R^{a}"

    labels = ["e"] + [rot(a) for a in range(1, n)]
    labels += ["F"] + [f"{rot(a)}F" for a in range(1, n)]
    return labels


def dihedral_group(n: int) -> FiniteGroup:
    """
    Symmetries of the regular n-gon, order 2n.

    Index ``x * n + a`` is the element ``R^a F^x``, so the carrier reads
    ``e, R, ..., R^(n-1), F, RF, ..., R^(n-1)F``. ``F R = R^(-1) F``.

    >>> D3 = dihedral_group(3)
    >>> D3.label(D3.op(D3.element_by_label("F"), D3.element_by_label("R")))
    'R^2F'
    """
    if n < 1:
        raise InvalidModulus(n, "dihedral groups need n >= 1")

    def mul(i: int, j: int) -> int:
        x, a = divmod(i, n)
        y, b = divmod(j, n)
        rot = (a + (b if x == 0 else -b)) % n
        return ((x + y) % 2) * n + rot

    order = 2 * n
    table = [[mul(i, j) for j in range(order)] for i in range(order)]
    return group_from_table(
        order, table, name=f"D{n}", labels=_dihedral_labels(n), trusted=True
    )


QUATERNION_LABELS = ("1", "i", "j", "k", "-1", "-i", "-j", "-k")

# products of the units 1, i, j, k as (sign, unit)
_QUAT_UNITS = {
    (0, 0): (1, 0), (0, 1): (1, 1), (0, 2): (1, 2), (0, 3): (1, 3),
    (1, 0): (1, 1), (1, 1): (-1, 0), (1, 2): (1, 3), (1, 3): (-1, 2),
    (2, 0): (1, 2), (2, 1): (-1, 3), (2, 2): (-1, 0), (2, 3): (1, 1),
    (3, 0): (1, 3), (3, 1): (1, 2), (3, 2): (-1, 1), (3, 3): (-1, 0),
}  # fmt: skip


def quaternion_group() -> FiniteGroup:
    """Q8, index ``s * 4 + u`` is ``(-1)^s`` times the unit ``(1, i, j, k)[u]``."""

    def mul(p: int, q: int) -> int:
        s1, u1 = divmod(p, 4)
        s2, u2 = divmod(q, 4)
        sign, unit = _QUAT_UNITS[(u1, u2)]
        negative = (s1 + s2 + (1 if sign < 0 else 0)) % 2
        return negative * 4 + unit

    table = [[mul(p, q) for q in range(8)] for p in range(8)]
    return group_from_table(8, table, name="Q8", labels=QUATERNION_LABELS, trusted=True)


def direct_product(G: FiniteGroup, H: FiniteGroup) -> FiniteGroup:
    """Index ``g * |H| + h`` is the pair ``(g, h)``."""
    m = H.order
    order = G.order * m

    def mul(i: int, j: int) -> int:
        g1, h1 = divmod(i, m)
        g2, h2 = divmod(j, m)
        return G.op(g1, g2) * m + H.op(h1, h2)

    table = [[mul(i, j) for j in range(order)] for i in range(order)]
    labels = [f"({G.label(g)},{H.label(h)})" for g in range(G.order) for h in range(m)]
    return group_from_table(
        order, table, name=f"{G.name}x{H.name}", labels=labels, trusted=True
    )


def ring_mod(n: int) -> FiniteRing:
    """
    >>> R = ring_mod(12)
    >>> R.times(5, 5), R.plus(6, 7)
    (1, 1)
    """
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise InvalidModulus(n, "modulus must be a positive integer")
    add = [[(a + b) % n for b in range(n)] for a in range(n)]
    mul = [[(a * b) % n for b in range(n)] for a in range(n)]
    return ring_from_tables(n, add, mul, name=f"ZZ{n}", trusted=True)


def matrix_ring_2x2(p: int) -> FiniteRing:
    """
    2x2 matrices over Z_p. Index ``((a*p + b)*p + c)*p + d`` is ``[[a, b], [c, d]]``.
    """
    if p not in (2, 3):
        raise InvalidModulus(p, "matrix rings are built for p in {2, 3}")

    def decode(i: int) -> Tuple[int, int, int, int]:
        i, d = divmod(i, p)
        i, c = divmod(i, p)
        a, b = divmod(i, p)
        return a, b, c, d

    def encode(a: int, b: int, c: int, d: int) -> int:
        return ((a * p + b) * p + c) * p + d

    order = p**4
    mats = [decode(i) for i in range(order)]
    add = [
        [encode(*((x + y) % p for x, y in zip(m1, m2))) for m2 in mats] for m1 in mats
    ]
    mul = [
        [
            encode(
                (a * e + b * g) % p,
                (a * f + b * h) % p,
                (c * e + d * g) % p,
                (c * f + d * h) % p,
            )
            for (e, f, g, h) in mats
        ]
        for (a, b, c, d) in mats
    ]
    labels = [f"[[{a},{b}],[{c},{d}]]" for (a, b, c, d) in mats]
    return ring_from_tables(
        order, add, mul, name=f"M2(Z{p})", labels=labels, trusted=True
    )


def is_abelian(G: FiniteGroup) -> bool:
    t = G.table
    return all(t[a][b] == t[b][a] for a in range(G.order) for b in range(a + 1, G.order))


def sumset(G: FiniteGroup, A: Iterable[ElementId], B: Iterable[ElementId]) -> Set[int]:
    t = G.table
    bs = tuple(B)
    return {t[a][b] for a in A for b in bs}


def nary_sumset(G: FiniteGroup, *sets: Iterable[ElementId]) -> Set[ElementId]:
    """
    Ordered sumset ``A_1 + A_2 + ... + A_m``, composed left to right.

    >>> sorted(nary_sumset(cyclic_group(5), {0, 1}, {0, 2}))
    [0, 1, 2, 3]
    """
    operands = [set(s) for s in sets]
    if not operands:
        return {G.identity}
    for i, s in enumerate(operands):
        if not s:
            raise EmptyOperand(i)
        for a in s:
            if not 0 <= a < G.order:
                raise ValueError(f"{a} is not an element of {G.name}")
    return reduce(lambda acc, s: sumset(G, acc, s), operands[1:], operands[0])


# Cayley table files ###################################################################


def _parse_rows(
    lines: List[Tuple[int, str]], start: int, order: int
) -> Tuple[List[List[int]], int]:
    rows = []
    pos = start
    for _ in range(order):
        if pos >= len(lines):
            last = lines[-1][0] if lines else 1
            raise TableParseError(last, f"expected {order} rows, got {len(rows)}")
        lineno, text = lines[pos]
        try:
            row = [int(tok) for tok in text.split()]
        except ValueError:
            raise TableParseError(
                lineno, f'row "{text}" is not a list of integers'
            ) from None
        if len(row) != order:
            raise TableParseError(lineno, f"expected {order} entries, got {len(row)}")
        rows.append(row)
        pos += 1
    return rows, pos


HEADER_REGEX = re.compile(r"^(group|ring)\s+(\d+)$")


def parse_table_text(text: str) -> "FiniteGroup | FiniteRing":
    """
    Parses the Cayley table format::

        group 2
        0 1
        1 0

    Rings give ``ring <order>`` followed by an ``add`` block and a ``mul`` block.
    Blank lines and ``#`` comments are ignored.
    """
    lines = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        stripped = raw.split("#", 1)[0].strip()
        if stripped:
            lines.append((lineno, stripped))
    if not lines:
        raise TableParseError(1, "empty table file")

    lineno, header = lines[0]
    match = HEADER_REGEX.match(header)
    if not match:
        raise TableParseError(lineno, 'expected "group <order>" or "ring <order>"')
    kind, order = match.group(1), int(match.group(2))
    if order < 1:
        raise TableParseError(lineno, "order must be positive")

    blocks: Dict[str, List[List[int]]] = {}
    if kind == "group":
        blocks["op"], pos = _parse_rows(lines, 1, order)
    else:
        pos = 1
        for expected in ("add", "mul"):
            if pos >= len(lines) or lines[pos][1] != expected:
                where = lines[pos][0] if pos < len(lines) else lines[-1][0]
                raise TableParseError(where, f'expected "{expected}" block')
            blocks[expected], pos = _parse_rows(lines, pos + 1, order)
    if pos < len(lines):
        raise TableParseError(lines[pos][0], "trailing content after the table")

    if kind == "group":
        return group_from_table(order, blocks["op"])
    return ring_from_tables(order, blocks["add"], blocks["mul"])


def load_table(path: Path) -> "FiniteGroup | FiniteRing":
    result = parse_table_text(path.read_text(encoding="utf-8"))
    name = path.stem
    if isinstance(result, FiniteGroup):
        return FiniteGroup(
            order=result.order,
            table=result.table,
            identity=result.identity,
            inverse=result.inverse,
            name=name,
        )
    return ring_from_tables(result.order, result.add, result.mul, name=name, trusted=True)


def format_table(structure: "FiniteGroup | FiniteRing") -> str:
    def rows(table: Table) -> List[str]:
        return [" ".join(str(v) for v in row) for row in table]

    if isinstance(structure, FiniteGroup):
        return "\n".join([f"group {structure.order}", *rows(structure.table)]) + "\n"
    return (
        "\n".join(
            [
                f"ring {structure.order}",
                "add",
                *rows(structure.add),
                "mul",
                *rows(structure.mul),
            ]
        )
        + "\n"
    )


# lookup by name #######################################################################

NAME_REGEX = {
    "cyclic": re.compile(r"^Z(\d+)$"),
    "dihedral": re.compile(r"^D(\d+)$"),
    "ring": re.compile(r"^ZZ(\d+)$"),
    "matrix": re.compile(r"^M2\(Z(\d+)\)$"),
}


def structure_by_name(name: str) -> "FiniteGroup | FiniteRing":
    """
    Built-in structures: ``Z5``, ``D4``, ``Q8``, products ``Z2xZ6`` or ``Z2xD3``,
    rings ``ZZ12`` and ``M2(Z3)``.

    >>> structure_by_name("Z2xZ6").order
    12
    """
    text = name.strip()
    if text == "Q8":
        return quaternion_group()
    if (m := NAME_REGEX["ring"].match(text)) is not None:
        return ring_mod(int(m.group(1)))
    if (m := NAME_REGEX["matrix"].match(text)) is not None:
        return matrix_ring_2x2(int(m.group(1)))
    if (m := NAME_REGEX["cyclic"].match(text)) is not None:
        return cyclic_group(int(m.group(1)))
    if (m := NAME_REGEX["dihedral"].match(text)) is not None:
        return dihedral_group(int(m.group(1)))
    if "x" in text:
        factors = [structure_by_name(part) for part in text.split("x")]
        if all(isinstance(f, FiniteGroup) for f in factors):
            return reduce(direct_product, factors)  # type: ignore
    raise UnknownStructure(name)


def group_by_name(name: str) -> FiniteGroup:
    structure = structure_by_name(name)
    if isinstance(structure, FiniteRing):
        return structure.additive_group()
    return structure


def ring_by_name(name: str) -> FiniteRing:
    structure = structure_by_name(name)
    if not isinstance(structure, FiniteRing):
        raise UnknownStructure(f"{name} (not a ring)")
    return structure
