import pytest

from pdsets.algebra import matrix_ring_2x2, ring_mod
from pdsets.errors import IdentityFailsAt, NotCommutative
from pdsets.hypergraph import (
    FractionalCovering,
    family_from_string,
    regular_covering,
    singletons,
)
from pdsets.inequalities.rings import (
    check_factorized,
    check_polynomial_compound,
    check_sum_of_squares,
)
from pdsets.statement import Context
from pdsets.statements import Factorized, PolynomialCompound, SumOfSquares

ZZ13 = ring_mod(13)


def test_sum_of_squares():
    v = check_sum_of_squares(ZZ13, [1, 2, 3], [0, 5])
    assert v.holds
    assert (v.lhs, v.rhs) == (6, 20)
    assert v.witness["|F(X)|"] == 6
    assert [x["size"] for x in v.witness["factors"]] == [5, 4]


def test_sum_of_squares_statement():
    v = SumOfSquares(A=[1, 2, 3], B=[0, 5]).check(Context(structure=ZZ13))
    assert (v.lhs, v.rhs) == (6, 20)
    assert v.statement == "sum-of-squares"


def test_sum_of_squares_needs_a_ring(z5):
    with pytest.raises(ValueError):
        SumOfSquares(A=[1], B=[2]).check(Context(structure=z5))


def test_polynomial_compound_with_sections():
    statement = PolynomialCompound(
        F="x1^2 + x2^2",
        g=["x1 + x2", "x1*x2 + x2*x1"],
        sections={"{1}": "y1^2", "{2}": "y2", "{1,2}": "y1^2 - y2"},
        ground=[[1, 2, 3], [0, 5]],
    )
    v = statement.check(Context(structure=ZZ13))
    assert v.statement == "polynomial-compound"
    assert (v.lhs, v.rhs) == (6, 20)


def test_polynomial_compound_checks_the_identity():
    statement = PolynomialCompound(F="x1^2", g=["x1"], f="product", ground=[[1, 2]])
    with pytest.raises(IdentityFailsAt):
        statement.check(Context(structure=ZZ13))


def test_polynomial_compound_needs_one_f():
    statement = PolynomialCompound(F="x1", g=["x1"], ground=[[1, 2]])
    with pytest.raises(ValueError):
        statement.check(Context(structure=ZZ13))


def test_factorized():
    v = check_factorized(ZZ13, ["x1", "x2"], FractionalCovering.of(singletons(2), [1, 1]), [[1, 2], [3, 4]])
    assert v.statement == "factorized"
    assert (v.lhs, v.rhs) == (4, 4)
    assert v.witness["F"] == "(x1) * (x2)"


def test_factorized_statement():
    v = Factorized(factors=["x1 + x2", "x2"], ground=[[1, 2], [3, 4]]).check(Context(structure=ZZ13))
    assert v.holds


def test_factorized_needs_intervals_in_noncommutative_rings():
    R = matrix_ring_2x2(2)
    covering = FractionalCovering.of(family_from_string("{1,3} {2}"), [1, 1])
    with pytest.raises(NotCommutative):
        check_factorized(R, ["x1", "x2", "x3"], covering, [[0], [1], [2]])


def test_polynomial_compound_factors_range_over_the_product_of_images():
    # y1 + y2 = 0 on every point g(x), but not on Y_1 × Y_2
    sections = {
        mask: " + ".join(f"y{p}" for p in positions)
        for mask, positions in [
            (0b001, [1]),
            (0b010, [2]),
            (0b100, [3]),
            (0b011, [1, 2]),
            (0b110, [2, 3]),
            (0b101, [1, 3]),
            (0b111, [1, 2, 3]),
        ]
    }
    covering = regular_covering(family_from_string("{1,2} {2,3} {1,3}", 3))
    v = check_polynomial_compound(
        ring_mod(5), sections, ["x1", "-x1", "x1"], "x1", covering, [[0, 1, 2]]
    )
    assert v.holds
    assert v.witness["|F(X)|"] == 3
    assert [x["size"] for x in v.witness["factors"]] == [5, 5, 5]
    assert (v.lhs, v.rhs, v.witness["power"]) == (9, 125, 2)
