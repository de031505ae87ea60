from fractions import Fraction

import pytest

from pdsets.algebra import cyclic_group
from pdsets.errors import (
    DNotInSumset,
    MiddleEnumerationBudgetExceeded,
    NotAbelian,
    NotAPartition,
    NotRegular,
)
from pdsets.hypergraph import FractionalCovering, family_from_string, singletons
from pdsets.inequalities.sumsets import (
    check_abelian_sumset,
    check_naive_pairwise,
    check_nonabelian,
    check_regular_abelian,
    check_ruzsa_quadruple,
    check_ruzsa_triple,
    conditioned_size,
    dihedral_example,
    gmr_leave_one_out,
    gmr_singletons,
    probe_weighted_nonabelian,
)
from pdsets.statement import Context
from pdsets.statements import AbelianSumset, NaivePairwise, Nonabelian, WeightedNonabelian

Z11 = cyclic_group(11)
A = [0, 1, 2]
B = [[0, 1], [0, 3], [0, 5]]
D = [0, 1, 3, 4]


def test_gmr_singletons():
    v = gmr_singletons(Z11, A, B, D)
    assert v.holds
    assert (v.lhs, v.rhs) == (7**3, 16 * 4 * 6 * 6)
    assert v.witness["|A+D|"] == 7
    assert v.witness["sizes"] == {"{1}": 4, "{2}": 6, "{3}": 6}


def test_gmr_leave_one_out():
    v = gmr_leave_one_out(Z11, A, B, D)
    assert v.holds
    assert (v.lhs, v.rhs) == (7**3, 4 * 11 * 8 * 7)
    assert v.witness["r"] == 2


def test_abelian_sumset_with_partition():
    v = check_abelian_sumset(Z11, A, B, D, FractionalCovering.of(singletons(3), [1, 1, 1]))
    assert v.statement == "abelian-sumset"
    assert v.holds
    assert (v.lhs, v.rhs) == (343, 2304)

    halves = FractionalCovering.of(family_from_string("{1,2} {2,3} {1,3}"), [Fraction(1, 2)] * 3)
    assert check_abelian_sumset(Z11, A, B, D, halves).witness["c"] == "3/2"


def test_abelian_sumset_needs_a_partition():
    covering = FractionalCovering.of(family_from_string("{1,2} {2,3} {1,3}"), [1, 1, 1])
    with pytest.raises(NotAPartition):
        check_abelian_sumset(Z11, A, B, D, covering)


def test_abelian_sumset_hypotheses(d3):
    with pytest.raises(DNotInSumset):
        gmr_singletons(Z11, A, B, [10])
    with pytest.raises(NotAbelian):
        gmr_singletons(d3, [0], [[0], [1]], [1])
    with pytest.raises(NotRegular):
        check_regular_abelian(Z11, A, B, D, family_from_string("{1,2} {2,3}"))
    with pytest.raises(ValueError):
        gmr_singletons(Z11, [], B, D)


def test_abelian_sumset_statement():
    statement = AbelianSumset(A=A, B=B, D=D, covering="singletons")
    v = statement.check(Context(structure=Z11))
    assert (v.lhs, v.rhs) == (343, 2304)


def test_naive_pairwise_fails_in_d3():
    G, sets = dihedral_example()
    v = check_naive_pairwise(G, sets)
    assert v.violated
    assert (v.lhs, v.rhs) == (16, 8)
    assert v.witness["pairs"] == {"|X1+X2|": 2, "|X1+X3|": 2, "|X2+X3|": 2}
    assert v.witness["|X1+...+Xk|"] == 4


def test_naive_pairwise_statement(d3):
    v = NaivePairwise(sets=[["e", "F"], ["R"], ["e", "F"]]).check(Context(structure=d3))
    assert v.violated


def test_nonabelian_bound_holds_in_d3():
    G, sets = dihedral_example()
    v = check_nonabelian(G, sets)
    assert v.holds
    assert (v.lhs, v.rhs) == (16, 16)
    assert v.witness["conditioned"]["A(1,3)"] == 4
    assert v.witness["maximizers"]["A(1,3)"] == ["R"]
    assert v.note == ""


def test_nonabelian_in_abelian_group(z5):
    v = Nonabelian(sets=[[0, 1], [0, 1]]).check(Context(structure=z5))
    assert v.holds
    assert v.note == "abelian group"


def test_conditioned_size():
    G, sets = dihedral_example()
    assert conditioned_size(G, sets, 1, 2) == (2, ())
    with pytest.raises(ValueError):
        conditioned_size(G, sets, 2, 2)
    with pytest.raises(MiddleEnumerationBudgetExceeded):
        check_nonabelian(G, sets, budget=1)


def test_ruzsa_triple():
    G, (S, T, U) = dihedral_example()
    v = check_ruzsa_triple(G, S, T, U)
    assert v.holds
    assert (v.lhs, v.rhs) == (16, 16)
    assert v.witness["t"] == ["R"]


def test_ruzsa_quadruple(z5):
    v = check_ruzsa_quadruple(z5, [0, 1], [0, 1], [0, 1], [0, 1])
    assert (v.lhs, v.rhs) == (125, 256)
    assert v.holds
    assert v.note == "open problem probe"


def test_weighted_probe_with_unit_weights():
    G, sets = dihedral_example()
    weights = {(1, 2): Fraction(1), (1, 3): Fraction(1), (2, 3): Fraction(1)}
    v = probe_weighted_nonabelian(G, sets, weights)
    assert (v.lhs, v.rhs) == (16, 16)
    assert v.witness["exponent"] == "2"
    with pytest.raises(ValueError):
        probe_weighted_nonabelian(G, sets, {(1, 4): Fraction(1)})
    with pytest.raises(ValueError):
        probe_weighted_nonabelian(G, sets, {(1, 2): Fraction(-1)})


def test_weighted_statement(d3):
    statement = WeightedNonabelian(
        sets=[["e", "F"], ["R"], ["e", "F"]], weights={"1,3": "1/2"}
    )
    v = statement.check(Context(structure=d3))
    assert v.witness["weights"] == {"A(1,2)": "0", "A(1,3)": "1/2", "A(2,3)": "0"}
    assert v.note == "weighted probe, no claim"
