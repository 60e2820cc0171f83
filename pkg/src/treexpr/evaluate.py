"""Scalar reference evaluator with C-style semantics.

This is a test oracle, not an execution engine: it pins down what a tree
means so that emitted strings can be checked for semantic equivalence.

* comparisons and logical operators yield 1.0 or 0.0; nonzero is true
* bitwise operators, shifts and ``%`` need integral operands and work on
  signed 64-bit integers (results wrap); ``%`` truncates toward zero
* ``**`` is floating-point power
* any non-finite intermediate result is a DomainError, never a silent NaN
"""

from __future__ import annotations

import math
import operator
from typing import Mapping

from .errors import (
    DomainError, EvalError, NonIntegralBitwiseOperand, UnboundSymbol,
    UnknownFunctionCall,
)
from .functions import REGISTRY
from .nodes import AstNode, BinaryOp, Call, Literal, Symbol, UnaryOp, is_multi_out

_INT64_MIN = -(1 << 63)
_INT64_MAX = (1 << 63) - 1


def _wrap64(n: int) -> int:
    n &= (1 << 64) - 1
    return n - (1 << 64) if n > _INT64_MAX else n


def _as_int(op: str, x: float) -> int:
    if not x.is_integer() or not _INT64_MIN <= x <= _INT64_MAX:
        raise NonIntegralBitwiseOperand(op, x)
    return int(x)


def _finite(x: float, what: str) -> float:
    if not math.isfinite(x):
        raise DomainError(f"{what} is not finite")
    return x


def _divide(a, b):
    if b == 0.0:
        raise DomainError("division by zero")
    return a / b


def _power(a, b):
    try:
        return math.pow(a, b)
    except (ValueError, OverflowError) as exc:
        raise DomainError(f"{a!r} ** {b!r}: {exc}") from None


def _truthy(x: float) -> bool:
    return x != 0.0


_ARITH = {
    "+": operator.add,
    "-": operator.sub,
    "*": operator.mul,
    "/": _divide,
    "**": _power,
}

_COMPARE = {
    "==": operator.eq,
    "!=": operator.ne,
    "<": operator.lt,
    "<=": operator.le,
    ">": operator.gt,
    ">=": operator.ge,
}


def _integral(op, a, b):
    x, y = _as_int(op, a), _as_int(op, b)
    if op == "&":
        return x & y
    if op == "|":
        return x | y
    if op == "^":
        return x ^ y
    if op in ("<<", ">>"):
        if not 0 <= y < 64:
            raise DomainError(f"shift count {y} outside [0, 63]")
        return _wrap64(x << y) if op == "<<" else x >> y
    if op == "%":
        if y == 0:
            raise DomainError("modulo by zero")
        r = abs(x) % abs(y)
        return -r if x < 0 else r
    raise AssertionError(op)


def evaluate(node: AstNode, env: Mapping[str, float] | None = None) -> float:
    """Value of ``node`` with symbols bound by ``env``."""
    env = {} if env is None else env
    if isinstance(node, Literal):
        return _finite(node.value, f"literal {node.lexeme}")
    if isinstance(node, Symbol):
        try:
            value = env[node.name]
        except KeyError:
            raise UnboundSymbol(node.name) from None
        return _finite(float(value), f"symbol {node.name}")
    if isinstance(node, UnaryOp):
        x = evaluate(node.operand, env)
        if node.op == "-":
            return -x
        if node.op == "+":
            return x
        if node.op == "!":
            return 0.0 if _truthy(x) else 1.0
        return float(~_as_int("~", x))
    if isinstance(node, BinaryOp):
        op = node.op
        a = evaluate(node.left, env)
        b = evaluate(node.right, env)
        if op in _ARITH:
            return _finite(_ARITH[op](a, b), f"result of {op!r}")
        if op in _COMPARE:
            return 1.0 if _COMPARE[op](a, b) else 0.0
        if op == "&&":
            return 1.0 if _truthy(a) and _truthy(b) else 0.0
        if op == "||":
            return 1.0 if _truthy(a) or _truthy(b) else 0.0
        return float(_integral(op, a, b))
    if isinstance(node, Call):
        if is_multi_out(node):
            raise EvalError("a multiple-output expression has no single value")
        if node.namespace is not None:
            desc = REGISTRY.lookup_source(node.name, node.namespace, "root")
        else:
            desc = REGISTRY.lookup_source(node.name, None, "numexpr")
        if desc is None:
            raise UnknownFunctionCall(node.qualified_name)
        if len(node.args) != desc.arity:
            raise EvalError(
                f"{node.qualified_name} takes {desc.arity} argument(s), got {len(node.args)}"
            )
        args = [evaluate(a, env) for a in node.args]
        try:
            return _finite(desc.semantics(*args), f"result of {node.qualified_name}")
        except ArithmeticError as exc:
            raise DomainError(str(exc)) from None
    raise EvalError(f"cannot evaluate {type(node).__name__} nodes")
