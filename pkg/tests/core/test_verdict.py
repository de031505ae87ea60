from fractions import Fraction

import pytest

from pdsets.pdfunc import NEUTRAL, GroupElem
from pdsets.verdict import Verdict, compare_powers, describe_margin, jsonable


def test_exact_le():
    v = Verdict.exact_le("log-submodular", 10, 9, {"group": "Z9"})
    assert v.status == "violated"
    assert v.violated and not v.holds
    assert v.margin == -1
    assert v.relation() == "10 > 9"
    assert describe_margin(v) == "-1"

    ok = Verdict.exact_le("log-submodular", 9, 9)
    assert ok.holds
    assert ok.relation() == "9 <= 9"


def test_big_numbers_serialize_as_strings():
    v = Verdict.exact_le("x", 2**70, 2**71)
    data = v.model_dump(mode="json")
    assert data["lhs"] == str(2**70)
    assert data["margin"] == str(2**70)
    assert v.model_dump()["lhs"] == 2**70


@pytest.mark.parametrize(
    "lhs, rhs, status",
    [
        (1.0, 2 / 3, "violated"),
        (1.0, 1.0 - 1e-12, "holds"),
        (1.0, 1.0 - 1e-8, "inconclusive"),
        (0.5, 2.0, "holds"),
    ],
)
def test_entropy_le(lhs, rhs, status):
    v = Verdict.entropy_le("entropy", lhs, rhs)
    assert v.status == status
    assert not v.exact


def test_entropy_relation():
    v = Verdict.entropy_le("entropy", 1.0, 2 / 3)
    assert v.margin == pytest.approx(-1 / 3)
    assert v.relation() == "1.000000000 > 0.666666667 bits"
    assert describe_margin(v) == "-0.333333333 bits"


def test_jsonable_witness():
    witness = {
        "weight": Fraction(1, 2),
        "image": {GroupElem(2), GroupElem(0)},
        "big": 2**60,
        "value": NEUTRAL,
        1: (1, 2),
    }
    assert jsonable(witness) == {
        "weight": "1/2",
        "image": ["g0", "g2"],
        "big": str(2**60),
        "value": "Neutral",
        "1": [1, 2],
    }


def test_with_run_info():
    v = Verdict.exact_le("x", 1, 2)
    stamped = v.with_run_info(seed=3, runtime_ms=1.5)
    assert (stamped.seed, stamped.runtime_ms) == (3, 1.5)
    assert v.seed is None


def test_compare_powers():
    assert compare_powers([(2, Fraction(1, 3))], [(3, Fraction(1, 2))]) == (4, 27, 6)
    assert compare_powers([(5, Fraction(1))], []) == (5, 1, 1)
    with pytest.raises(ValueError):
        compare_powers([(2, Fraction(-1))], [])
