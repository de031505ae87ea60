from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from pdsets.errors import Infeasible, NestedPair, NotACovering, NotRegular
from pdsets.hypergraph import (
    FractionalCovering,
    SubsetFamily,
    all_subsets_of_size,
    compress_pair,
    compression_weight,
    degree_covering,
    degrees,
    dominates,
    elementary_compression,
    family_from_string,
    is_chain,
    is_regular,
    leave_one_out,
    min_covering_lp,
    minimal_multiset,
    regular_covering,
    replay,
    singletons,
)
from pdsets.masks import mask_of


def test_family_from_string():
    C = family_from_string("{2,3} {1,2}")
    assert C.k == 3
    assert str(C) == "{1,2} {2,3}"
    assert len(C) == 2
    assert family_from_string("{1}", k=4).k == 4


def test_named_families():
    assert singletons(3).degrees() == (1, 1, 1)
    assert len(all_subsets_of_size(4, 2)) == 6
    assert is_regular(all_subsets_of_size(4, 2)) == 3
    assert str(leave_one_out(3)) == "{1,2} {1,3} {2,3}"
    assert is_regular(leave_one_out(3)) == 2
    assert is_regular(family_from_string("{1,2} {2,3}")) is None
    with pytest.raises(ValueError):
        leave_one_out(1)
    with pytest.raises(ValueError):
        all_subsets_of_size(3, 4)


def test_members_must_fit():
    with pytest.raises(ValueError):
        SubsetFamily.of(2, [[1, 3]])


def test_regular_covering():
    covering = regular_covering(all_subsets_of_size(3, 2))
    assert covering.weights == (Fraction(1, 2),) * 3
    assert covering.is_partition
    assert covering.total == Fraction(3, 2)
    with pytest.raises(NotRegular):
        regular_covering(family_from_string("{1,2} {2,3}"))


def test_degree_covering():
    covering = degree_covering(family_from_string("{1} {1,2}"))
    assert covering.weights == (Fraction(1, 2), Fraction(1))
    assert covering.coverage() == (Fraction(3, 2), Fraction(1))
    assert not covering.is_partition
    with pytest.raises(Infeasible):
        degree_covering(SubsetFamily.of(3, [[1], [2]]))


def test_min_covering_lp():
    covering = min_covering_lp(family_from_string("{1,2} {2,3} {1,3} {1,2,3}"))
    assert covering.total == 1
    assert covering.as_dict()["{1,2,3}"] == "1"

    triangle = min_covering_lp(all_subsets_of_size(3, 2))
    assert triangle.weights == (Fraction(1, 2),) * 3

    with pytest.raises(Infeasible):
        min_covering_lp(SubsetFamily.of(2, [[1]]))


def test_covering_validation():
    with pytest.raises(NotACovering):
        FractionalCovering.of(singletons(2), [1, Fraction(1, 2)])
    with pytest.raises(ValueError):
        FractionalCovering.of(singletons(2), [1, -1])
    with pytest.raises(ValueError):
        FractionalCovering.of(singletons(2), [1])
    with pytest.raises(ValueError):
        FractionalCovering.of(singletons(2), {mask_of([1]): 1})


def test_covering_from_mapping():
    C = family_from_string("{1,2} {2,3} {1,3}")
    covering = FractionalCovering.of(
        C, {mask_of([1, 2]): 1, mask_of([2, 3]): 0, mask_of([1, 3]): 1}
    )
    assert covering.coverage() == (2, 1, 1)
    assert covering.as_dict() == {"{1,2}": "1", "{1,3}": "1", "{2,3}": "0"}


def test_as_dict_marks_repeated_members():
    C = SubsetFamily.of(2, [[1, 2], [1, 2]])
    covering = FractionalCovering.of(C, [Fraction(1, 2), Fraction(1, 2)])
    assert covering.as_dict() == {"{1,2}": "1/2", "{1,2}'": "1/2"}


def test_compression():
    A = family_from_string("{1,2} {2,3}")
    B = elementary_compression(A, 0, 1)
    assert str(B) == "{2} {1,2,3}"
    assert compression_weight(A) == 8
    assert compression_weight(B) == 10
    assert degrees(A) == degrees(B)
    assert is_chain(B)
    assert not is_chain(A)
    with pytest.raises(NestedPair):
        compress_pair(B, B.members[0], B.members[1])
    with pytest.raises(ValueError):
        elementary_compression(A, 1, 1)


def test_disjoint_members_merge():
    A = family_from_string("{1} {2}")
    assert str(compress_pair(A, 0b01, 0b10)) == "{1,2}"


def test_minimal_multiset():
    assert str(minimal_multiset(family_from_string("{1,2} {2,3}"))) == "{2} {1,2,3}"
    assert str(minimal_multiset(family_from_string("{1,2} {2,3} {3,4}"))) == "{2,3} {1,2,3,4}"


def test_dominates():
    A = family_from_string("{1,2} {2,3} {3,4}")
    B = minimal_multiset(A)
    result = dominates(A, B)
    assert result.status == "yes"
    assert replay(A, result.steps)[-1] == B

    assert dominates(A, A).status == "yes"
    assert dominates(A, A).steps == ()
    assert dominates(A, family_from_string("{1,2,3,4}")).status == "no"


def test_dominates_budget():
    A = family_from_string("{1,2} {2,3} {3,4}")
    result = dominates(A, minimal_multiset(A), budget=1)
    assert result.status == "budget_exhausted"


def test_dominates_needs_same_k():
    with pytest.raises(ValueError):
        dominates(singletons(2), singletons(3))


families = st.lists(
    st.integers(min_value=1, max_value=2**4 - 1), min_size=2, max_size=5
).map(lambda members: SubsetFamily(4, tuple(members)))


@given(families)
def test_compressions_keep_degrees_and_raise_weight(A):
    distinct = list(dict.fromkeys(A.members))
    for i, first in enumerate(distinct):
        for second in distinct[i + 1 :]:
            if first & second in (first, second):
                continue
            B = compress_pair(A, first, second)
            assert degrees(B) == degrees(A)
            assert compression_weight(B) > compression_weight(A)


@given(families)
def test_minimal_multiset_is_a_chain_with_same_degrees(A):
    M = minimal_multiset(A)
    assert is_chain(M)
    assert degrees(M) == degrees(A)
