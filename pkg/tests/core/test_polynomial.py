import pytest

from pdsets.algebra import ring_mod
from pdsets.polynomial import ExpressionError, RingExpr, bind, variable_index


def test_parse():
    assert RingExpr.parse("x10 + x2").variables == ("x2", "x10")
    assert str(RingExpr.parse("x1^2")) == "x1^2"


@pytest.mark.parametrize(
    "text, env, expected",
    [
        ("x1^2 + x2^2", {"x1": 2, "x2": 3}, 0),
        ("(x1 + x2)^2", {"x1": 2, "x2": 3}, 12),
        ("x1*x2 - x2", {"x1": 4, "x2": 5}, 2),
        ("3*x1", {"x1": 5}, 2),
        ("-x1", {"x1": 1}, 12),
        ("x1 + 0", {"x1": 7}, 7),
        ("0", {}, 0),
    ],
)
def test_evaluate(text, env, expected):
    assert RingExpr.parse(text).evaluate(ring_mod(13), env) == expected


@pytest.mark.parametrize(
    "text",
    ["x1 +", "x1 / x2", "1.5*x1", "x1 ^ x2", "x1^0", "f(x1)"],
)
def test_rejects_invalid_expressions(text):
    with pytest.raises(ExpressionError):
        RingExpr.parse(text).evaluate(ring_mod(5), {"x1": 1, "x2": 2})


def test_constants_need_a_ring_element():
    R = ring_mod(5)
    with pytest.raises(ExpressionError):
        RingExpr.parse("3").evaluate(R, {})
    with pytest.raises(ExpressionError):
        RingExpr.parse("x1 + 1").evaluate(R, {"x1": 1})


def test_unknown_variable():
    with pytest.raises(ExpressionError):
        RingExpr.parse("x3").evaluate(ring_mod(5), {"x1": 1})


def test_variables():
    assert variable_index("x3", "x") == 3
    with pytest.raises(ExpressionError):
        variable_index("y3", "x")
    assert bind("x", (4, 5)) == {"x1": 4, "x2": 5}
