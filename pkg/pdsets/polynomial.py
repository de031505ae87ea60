"""
Polynomial expressions over a finite ring, e.g. ``x1^2 + x2^2`` or ``x1*x2 + x2*x1``.

Supported: ``+``, ``-``, ``*``, ``^``/``**`` with positive integer exponents,
parentheses and variables. Integer literals act as coefficients (``3*x1`` is
``x1 + x1 + x1``) because the rings need not have a unit; ``0`` on its own is the zero
element. Products keep their order, so expressions are fine in non-commutative rings.
"""

from __future__ import annotations

import ast
import re
from dataclasses import dataclass
from typing import Dict, Mapping, Tuple, Union

from .algebra import FiniteRing

VARIABLE_REGEX = re.compile(r"^([A-Za-z]+)(\d+)$")


class ExpressionError(ValueError):
    pass


@dataclass(frozen=True)
class _Scalar:
    value: int


_Result = Union[int, _Scalar]


def _check_node(node: ast.AST, text: str) -> None:
    allowed = (
        ast.Expression,
        ast.BinOp,
        ast.UnaryOp,
        ast.Name,
        ast.Constant,
        ast.Load,
        ast.Add,
        ast.Sub,
        ast.Mult,
        ast.Pow,
        ast.USub,
        ast.UAdd,
    )
    for child in ast.walk(node):
        if not isinstance(child, allowed):
            raise ExpressionError(
                f'Unsupported syntax "{type(child).__name__}" in "{text}"'
            )
        if isinstance(child, ast.Constant) and (
            not isinstance(child.value, int) or isinstance(child.value, bool)
        ):
            raise ExpressionError(f'Only integer literals are allowed in "{text}"')


@dataclass(frozen=True)
class RingExpr:
    text: str
    tree: ast.Expression
    variables: Tuple[str, ...]

    @classmethod
    def parse(cls, text: str) -> "RingExpr":
        """
        >>> RingExpr.parse("x1^2 + 2*x2").variables
        ('x1', 'x2')
        """
        source = text.replace("^", "**")
        try:
            tree = ast.parse(source.strip(), mode="eval")
        except SyntaxError as e:
            raise ExpressionError(f'Cannot parse "{text}": {e.msg}') from None
        _check_node(tree, text)
        names = sorted(
            {n.id for n in ast.walk(tree) if isinstance(n, ast.Name)},
            key=_variable_sort_key,
        )
        return cls(text=text, tree=tree, variables=tuple(names))

    def __str__(self) -> str:
        return self.text

    def evaluate(self, R: FiniteRing, env: Mapping[str, int]) -> int:
        """
        >>> from pdsets.algebra import ring_mod
        >>> RingExpr.parse("x1^2 + x2^2").evaluate(ring_mod(13), {"x1": 2, "x2": 3})
        0
        """
        result = self._eval(self.tree.body, R, env)
        if isinstance(result, _Scalar):
            if result.value == 0:
                return R.zero
            raise ExpressionError(
                f'"{self.text}" is an integer constant, not a ring element'
            )
        return result

    def _eval(self, node: ast.AST, R: FiniteRing, env: Mapping[str, int]) -> _Result:
        if isinstance(node, ast.Constant):
            return _Scalar(node.value)
        if isinstance(node, ast.Name):
            try:
                return env[node.id]
            except KeyError:
                raise ExpressionError(
                    f'Unknown variable "{node.id}" in "{self.text}"'
                ) from None
        if isinstance(node, ast.UnaryOp):
            value = self._eval(node.operand, R, env)
            if isinstance(node.op, ast.UAdd):
                return value
            if isinstance(value, _Scalar):
                return _Scalar(-value.value)
            return R.neg[value]
        if isinstance(node, ast.BinOp):
            left = self._eval(node.left, R, env)
            right = self._eval(node.right, R, env)
            if isinstance(node.op, ast.Add):
                return self._add(R, left, right)
            if isinstance(node.op, ast.Sub):
                negated = (
                    _Scalar(-right.value) if isinstance(right, _Scalar) else R.neg[right]
                )
                return self._add(R, left, negated)
            if isinstance(node.op, ast.Mult):
                return self._mul(R, left, right)
            if isinstance(node.op, ast.Pow):
                return self._pow(R, left, right)
        raise ExpressionError(f'Unsupported expression in "{self.text}"')

    def _add(self, R: FiniteRing, a: _Result, b: _Result) -> _Result:
        if isinstance(a, _Scalar) and isinstance(b, _Scalar):
            return _Scalar(a.value + b.value)
        if isinstance(a, _Scalar) or isinstance(b, _Scalar):
            scalar = a if isinstance(a, _Scalar) else b
            other = b if isinstance(a, _Scalar) else a
            if scalar.value == 0:  # type: ignore[union-attr]
                return other
            raise ExpressionError(
                f'Integer constants must multiply a ring element in "{self.text}"'
            )
        return R.add[a][b]

    def _mul(self, R: FiniteRing, a: _Result, b: _Result) -> _Result:
        if isinstance(a, _Scalar) and isinstance(b, _Scalar):
            return _Scalar(a.value * b.value)
        if isinstance(a, _Scalar):
            return R.multiple(b, a.value)  # type: ignore[arg-type]
        if isinstance(b, _Scalar):
            return R.multiple(a, b.value)
        return R.mul[a][b]

    def _pow(self, R: FiniteRing, base: _Result, exponent: _Result) -> _Result:
        if not isinstance(exponent, _Scalar) or exponent.value < 1:
            raise ExpressionError(
                f'Exponents must be positive integer literals in "{self.text}"'
            )
        if isinstance(base, _Scalar):
            return _Scalar(base.value**exponent.value)
        return R.power(base, exponent.value)


def _variable_sort_key(name: str) -> Tuple[str, int, str]:
    match = VARIABLE_REGEX.match(name)
    if match:
        return (match.group(1), int(match.group(2)), name)
    return (name, 0, name)


def variable_index(name: str, prefix: str) -> int:
    """``variable_index("x3", "x") == 3``"""
    match = VARIABLE_REGEX.match(name)
    if not match or match.group(1) != prefix:
        raise ExpressionError(f'Expected a variable "{prefix}<n>", got "{name}"')
    return int(match.group(2))


def bind(prefix: str, values: Tuple[int, ...], start: int = 1) -> Dict[str, int]:
    """``bind("x", (4, 5)) == {"x1": 4, "x2": 5}``"""
    return {f"{prefix}{i}": v for i, v in enumerate(values, start=start)}
