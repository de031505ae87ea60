from fractions import Fraction

import pytest

from pdsets.simplex import Unbounded, maximize


def test_maximize():
    solution = maximize([[1, 1], [1, 0]], [4, 3], [1, 2])
    assert solution.value == 8
    assert solution.x == (0, 4)


def test_duals_are_optimal():
    # max y1 + y2 + y3 with y_i + y_j <= 1 for every pair
    A = [[1, 1, 0], [1, 0, 1], [0, 1, 1]]
    solution = maximize(A, [1, 1, 1], [1, 1, 1])
    assert solution.value == Fraction(3, 2)
    assert solution.duals == (Fraction(1, 2),) * 3
    assert sum(solution.duals) == solution.value


def test_zero_objective():
    solution = maximize([[1]], [5], [0])
    assert solution.value == 0
    assert solution.pivots == 0


def test_unbounded():
    with pytest.raises(Unbounded):
        maximize([[1, -1]], [1], [1, 1])


def test_invalid_input():
    with pytest.raises(ValueError):
        maximize([[1, 1]], [1, 2], [1, 1])
    with pytest.raises(ValueError):
        maximize([[1, 1]], [-1], [1, 1])
    with pytest.raises(ValueError):
        maximize([[1]], [1], [1, 1])
