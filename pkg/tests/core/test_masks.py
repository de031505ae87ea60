import pytest
from hypothesis import given
from hypothesis import strategies as st

from pdsets.errors import EmptyMask
from pdsets.masks import (
    all_masks,
    check_mask,
    complement,
    format_mask,
    full_mask,
    indices_of,
    is_interval,
    is_subset,
    mask_of,
    parse_family,
    parse_mask,
    popcount,
    positions_of,
    project,
    submasks,
)


def test_mask_of():
    assert mask_of([1, 3]) == 0b101
    assert mask_of([]) == 0
    assert indices_of(0b101) == (1, 3)
    assert positions_of(0b101) == (0, 2)
    with pytest.raises(ValueError):
        mask_of([0])
    with pytest.raises(ValueError):
        mask_of([25])


def test_set_operations():
    assert popcount(0b1011) == 3
    assert full_mask(3) == 0b111
    assert complement(0b001, 3) == 0b110
    assert is_subset(0b001, 0b011)
    assert not is_subset(0b100, 0b011)
    assert is_subset(0, 0b011)


def test_check_mask():
    assert check_mask(0b011, 3) == 0b011
    assert check_mask(0, 3, allow_empty=True) == 0
    with pytest.raises(ValueError):
        check_mask(0b1000, 3)
    with pytest.raises(EmptyMask):
        check_mask(0, 3)


def test_enumeration():
    assert list(submasks(0b101)) == [0b101, 0b100, 0b001, 0]
    assert list(all_masks(2)) == [1, 2, 3]
    assert list(all_masks(2, nonempty=False)) == [0, 1, 2, 3]


def test_is_interval():
    assert is_interval(0b0110)
    assert is_interval(0b1)
    assert not is_interval(0b101)
    assert not is_interval(0)


def test_project():
    assert project((7, 8, 9), 0b111, 0b010) == (8,)
    assert project((7, 9), 0b101, 0b100) == (9,)
    assert project((7, 8, 9), 0b111, 0) == ()


def test_parse_mask():
    assert parse_mask("{1,3}") == 0b101
    assert parse_mask("{ 2 3 }") == 0b110
    assert parse_mask("1, 2") == 0b011
    assert parse_mask("{}") == 0
    with pytest.raises(ValueError):
        parse_mask("{a}")


def test_parse_family():
    assert parse_family("{1,2} {2,3} {1,2}") == (0b011, 0b110, 0b011)
    with pytest.raises(ValueError):
        parse_family("{1} and {2}")


@given(st.integers(min_value=0, max_value=2**8 - 1))
def test_indices_describe_the_mask(mask):
    indices = indices_of(mask)
    assert len(indices) == popcount(mask)
    assert mask_of(indices) == mask
    assert parse_mask(format_mask(mask)) == mask
