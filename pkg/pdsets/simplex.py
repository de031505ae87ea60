"""
Exact simplex method over the rationals.

Solves ``max c·y  s.t.  A y <= b, y >= 0`` for ``b >= 0`` (the origin is feasible, so
no phase one is needed). Pivoting follows Bland's rule, which rules out cycling.
"""

from __future__ import annotations

from fractions import Fraction
from typing import List, NamedTuple, Sequence, Tuple, Union

Number = Union[int, Fraction]


class Unbounded(ValueError):
    pass


class LPSolution(NamedTuple):
    value: Fraction
    x: Tuple[Fraction, ...]
    # optimal solution of the dual problem min b·z s.t. Aᵀz >= c, z >= 0
    duals: Tuple[Fraction, ...]
    pivots: int


def maximize(
    A: Sequence[Sequence[Number]],
    b: Sequence[Number],
    c: Sequence[Number],
) -> LPSolution:
    """
    >>> maximize([[1, 1], [1, 0]], [4, 3], [1, 2]).value
    Fraction(8, 1)
    """
    m, n = len(A), len(c)
    if len(b) != m:
        raise ValueError(f"A has {m} rows but b has {len(b)} entries")
    if any(v < 0 for v in b):
        raise ValueError("Right-hand side must be nonnegative")
    width = n + m

    rows: List[List[Fraction]] = []
    for r, row in enumerate(A):
        if len(row) != n:
            raise ValueError(f"Row {r} of A has {len(row)} entries, expected {n}")
        slack = [Fraction(int(i == r)) for i in range(m)]
        rows.append([Fraction(v) for v in row] + slack + [Fraction(b[r])])
    # reduced costs; the last entry holds minus the objective value
    cost = [Fraction(v) for v in c] + [Fraction(0)] * m + [Fraction(0)]
    basis = list(range(n, width))

    pivots = 0
    while True:
        entering = next((j for j in range(width) if cost[j] > 0), None)
        if entering is None:
            break
        leaving = None
        best: Tuple[Fraction, int] = (Fraction(0), 0)
        for r, row in enumerate(rows):
            if row[entering] > 0:
                candidate = (row[-1] / row[entering], basis[r])
                if leaving is None or candidate < best:
                    leaving, best = r, candidate
        if leaving is None:
            raise Unbounded(f"Objective is unbounded along variable {entering}")

        pivot_row = rows[leaving]
        piv = pivot_row[entering]
        rows[leaving] = pivot_row = [v / piv for v in pivot_row]
        for r, row in enumerate(rows):
            if r != leaving and row[entering] != 0:
                factor = row[entering]
                rows[r] = [v - factor * p for v, p in zip(row, pivot_row)]
        factor = cost[entering]
        cost = [v - factor * p for v, p in zip(cost, pivot_row)]
        basis[leaving] = entering
        pivots += 1

    x = [Fraction(0)] * width
    for r, j in enumerate(basis):
        x[j] = rows[r][-1]
    duals = tuple(-cost[n + i] for i in range(m))
    return LPSolution(value=-cost[-1], x=tuple(x[:n]), duals=duals, pivots=pivots)
