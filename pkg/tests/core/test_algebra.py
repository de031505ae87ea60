import pytest
from hypothesis import given
from hypothesis import strategies as st

from pdsets.algebra import (
    FiniteGroup,
    cyclic_group,
    dihedral_group,
    direct_product,
    format_table,
    group_by_name,
    group_from_table,
    load_table,
    matrix_ring_2x2,
    nary_sumset,
    parse_table_text,
    quaternion_group,
    ring_by_name,
    ring_from_tables,
    ring_mod,
    structure_by_name,
    sumset,
)
from pdsets.errors import (
    BadTableShape,
    EmptyOperand,
    InvalidModulus,
    NoIdentity,
    NoInverse,
    NotAssociative,
    NotClosed,
    NotDistributive,
    TableParseError,
    UnknownStructure,
)


def test_cyclic_group():
    G = cyclic_group(5)
    assert G.order == 5
    assert G.name == "Z5"
    assert G.op(3, 4) == 2
    assert G.inv(2) == 3
    assert G.is_abelian()


def test_multiple():
    G = cyclic_group(7)
    assert G.multiple(3, 3) == 2
    assert G.multiple(3, -1) == 4
    assert G.multiple(5, 0) == G.identity


def test_dihedral_group_labels(d3):
    assert d3.order == 6
    assert not d3.is_abelian()
    assert d3.labels == ("e", "R", "R^2", "F", "RF", "R^2F")
    R = d3.element_by_label("R")
    F = d3.element_by_label("F")
    assert d3.label(d3.op(F, R)) == "R^2F"
    assert d3.label(d3.op(R, F)) == "RF"
    assert d3.inv(R) == d3.element_by_label("R^2")


def test_element_by_label_accepts_indices(d3):
    assert d3.element_by_label("4") == 4
    with pytest.raises(ValueError):
        d3.element_by_label("G")
    with pytest.raises(ValueError):
        d3.element_by_label("6")


def test_quaternion_group():
    Q = quaternion_group()
    i, j, k = (Q.element_by_label(x) for x in "ijk")
    assert Q.op(i, j) == k
    assert Q.label(Q.op(j, i)) == "-k"
    assert Q.label(Q.op(i, i)) == "-1"
    assert Q.identity == Q.element_by_label("1")
    assert not Q.is_abelian()


def test_direct_product():
    G = direct_product(cyclic_group(2), cyclic_group(3))
    assert G.order == 6
    assert G.name == "Z2xZ3"
    assert G.is_abelian()
    assert G.label(5) == "(1,2)"


def test_ring_mod():
    R = ring_mod(12)
    assert R.name == "ZZ12"
    assert R.times(5, 5) == 1
    assert R.plus(6, 7) == 1
    assert R.power(2, 3) == 8
    assert R.commutative_mul
    with pytest.raises(InvalidModulus):
        ring_mod(0)


def test_matrix_ring():
    R = matrix_ring_2x2(2)
    assert R.order == 16
    assert not R.commutative_mul
    assert R.label(R.zero) == "[[0,0],[0,0]]"
    with pytest.raises(InvalidModulus):
        matrix_ring_2x2(5)


def test_additive_group():
    G = ring_mod(6).additive_group()
    assert isinstance(G, FiniteGroup)
    assert G.name == "(ZZ6,+)"
    assert G.op(4, 5) == 3


def test_table_validation():
    with pytest.raises(BadTableShape):
        group_from_table(2, [[0, 1]])
    with pytest.raises(NotClosed):
        group_from_table(2, [[0, 5], [5, 0]])
    with pytest.raises(NoIdentity):
        group_from_table(2, [[0, 0], [0, 0]])
    with pytest.raises(NoInverse):
        group_from_table(2, [[0, 1], [1, 1]])
    with pytest.raises(NotAssociative):
        group_from_table(3, [[0, 1, 2], [1, 0, 1], [2, 2, 0]])


def test_ring_validation():
    add = [[0, 1], [1, 0]]
    # "mul" = "add" does not distribute
    with pytest.raises(NotDistributive):
        ring_from_tables(2, add, add)
    R = ring_from_tables(2, add, [[0, 0], [0, 1]])
    assert R.commutative_mul


def test_sumset(z5):
    assert sumset(z5, {0, 1}, {0, 2}) == {0, 1, 2, 3}
    assert nary_sumset(z5, {1}, {1}, {1}) == {3}
    assert nary_sumset(z5) == {z5.identity}
    with pytest.raises(EmptyOperand):
        nary_sumset(z5, {0}, set())


def test_nary_sumset_keeps_order(d3):
    R = d3.element_by_label("R")
    F = d3.element_by_label("F")
    assert nary_sumset(d3, {F}, {R}) != nary_sumset(d3, {R}, {F})


def test_parse_group_table():
    G = parse_table_text(
        """
        # the group of order 2
        group 2
        0 1
        1 0
        """
    )
    assert isinstance(G, FiniteGroup)
    assert G.op(1, 1) == 0


def test_parse_ring_table():
    R = parse_table_text("ring 2\nadd\n0 1\n1 0\nmul\n0 0\n0 1\n")
    assert R.times(1, 1) == 1


def test_parse_table_errors():
    with pytest.raises(TableParseError) as e:
        parse_table_text("group 2\n0 1\n")
    assert e.value.line == 2
    with pytest.raises(TableParseError):
        parse_table_text("monoid 2\n0 1\n1 0\n")
    with pytest.raises(TableParseError):
        parse_table_text("group 2\n0 1\n1 x\n")
    with pytest.raises(TableParseError):
        parse_table_text("group 1\n0\n0\n")
    with pytest.raises(TableParseError):
        parse_table_text("")


def test_load_table(tmp_path):
    path = tmp_path / "klein.txt"
    path.write_text(format_table(structure_by_name("Z2xZ2")))
    G = load_table(path)
    assert G.name == "klein"
    assert G.order == 4
    assert G.is_abelian()


def test_structure_by_name():
    assert structure_by_name("Z2xZ6").order == 12
    assert structure_by_name("D4").order == 8
    assert structure_by_name("Q8").name == "Q8"
    assert structure_by_name(" ZZ12 ").order == 12
    assert structure_by_name("M2(Z2)").order == 16
    assert structure_by_name("Z2xD3").order == 12
    with pytest.raises(UnknownStructure):
        structure_by_name("S4")
    with pytest.raises(UnknownStructure):
        structure_by_name("Z2xZZ3")


def test_group_and_ring_by_name():
    assert group_by_name("ZZ5").name == "(ZZ5,+)"
    assert ring_by_name("ZZ5").order == 5
    with pytest.raises(UnknownStructure):
        ring_by_name("Z5")


@given(n=st.integers(min_value=1, max_value=7), data=st.data())
def test_dihedral_group_axioms(n, data):
    G = dihedral_group(n)
    element = st.integers(min_value=0, max_value=G.order - 1)
    a, b, c = data.draw(element), data.draw(element), data.draw(element)
    assert G.op(G.op(a, b), c) == G.op(a, G.op(b, c))
    assert G.op(a, G.inv(a)) == G.identity
    assert G.op(G.identity, a) == a


@given(
    A=st.sets(st.integers(min_value=0, max_value=11), min_size=1),
    B=st.sets(st.integers(min_value=0, max_value=11), min_size=1),
)
def test_abelian_sumset_laws(A, B):
    G = structure_by_name("Z2xZ6")
    AB = sumset(G, A, B)
    assert AB == sumset(G, B, A)
    assert max(len(A), len(B)) <= len(AB) <= len(A) * len(B)
