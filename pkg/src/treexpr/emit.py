"""Render trees as expression strings in root, numexpr or python syntax.

Output is fully parenthesized: each operand of a binary operator and the
operand of a unary operator is wrapped in parentheses, whatever its kind.
The top-level expression, call arguments and subscript indices are not
wrapped. Literals are written with their original lexeme.

Logical operators have no numexpr/python spelling, so they are mapped onto
their elementwise counterparts (``&&`` -> ``&``, ``||`` -> ``|``,
``!`` -> ``~``). That is exact on boolean arrays, which is what these
targets operate on, but not on arbitrary scalars: ``~2`` is not ``!2``.
"""

from __future__ import annotations

from .errors import Dialect, UnknownFunction, UnsupportedConstruct, as_dialect
from .functions import REGISTRY
from .nodes import (
    AstNode, BinaryOp, Call, Empty, Literal, Matrix, Slice, Symbol, UnaryOp,
    is_multi_out,
)

_LOGICAL_TO_ELEMENTWISE = {"&&": "&", "||": "|", "!": "~"}

_ROOT_SEPARATOR = " : "


def emit(node: AstNode, target: Dialect | str) -> str:
    """Expression string for ``node`` in the ``target`` dialect.

    Raises UnsupportedConstruct when the target cannot express a node, and
    UnknownFunction for a namespaced call that has no translation.
    """
    target = as_dialect(target)
    if is_multi_out(node):
        if target is not Dialect.ROOT:
            raise UnsupportedConstruct(
                node, target, "the multiple-output construct exists only in root"
            )
        return _ROOT_SEPARATOR.join(_emit(a, target) for a in node.args)
    return _emit(node, target)


def _op(op: str, node, target: Dialect) -> str:
    if target is Dialect.ROOT:
        return op
    if op in _LOGICAL_TO_ELEMENTWISE:
        return _LOGICAL_TO_ELEMENTWISE[op]
    if op == "%" and target is Dialect.NUMEXPR:
        raise UnsupportedConstruct(node, target, "the modulo operator '%' is root only")
    return op


def _emit(node: AstNode, target: Dialect) -> str:
    if isinstance(node, Literal):
        return node.lexeme
    if isinstance(node, Symbol):
        return node.name
    if isinstance(node, UnaryOp):
        return f"{_op(node.op, node, target)}({_emit(node.operand, target)})"
    if isinstance(node, BinaryOp):
        left = _emit(node.left, target)
        right = _emit(node.right, target)
        return f"({left}){_op(node.op, node, target)}({right})"
    if isinstance(node, Call):
        args = ", ".join(_emit(a, target) for a in node.args)
        return f"{_function_name(node, target)}({args})"
    if isinstance(node, Matrix):
        if target is Dialect.NUMEXPR:
            raise UnsupportedConstruct(node, target, "numexpr has no subscripts")
        base = _emit(node.base, target)
        if not isinstance(node.base, (Literal, Symbol, Call)):
            base = f"({base})"
        return base + "".join(_emit(s, target) for s in node.slices)
    if isinstance(node, Slice):
        if isinstance(node.index, Empty):
            return "[:]" if target is Dialect.PYTHON else "[]"
        return f"[{_emit(node.index, target)}]"
    if isinstance(node, Empty):
        raise UnsupportedConstruct(node, target, "an empty subscript outside of a slice")
    raise TypeError(f"not an AstNode: {node!r}")


def _function_name(node: Call, target: Dialect) -> str:
    # root keeps calls verbatim, so root -> root is an exact round trip;
    # plain names elsewhere resolve through the numexpr column, the only
    # parse dialect whose functions are spelled without a namespace
    if target is Dialect.ROOT:
        desc = None
        if node.namespace is not None:
            return node.qualified_name
    elif node.namespace is not None:
        desc = REGISTRY.lookup_source(node.name, node.namespace, Dialect.ROOT)
        if desc is None:
            raise UnknownFunction(
                node, target,
                f"{node.qualified_name} has no known {target} equivalent",
            )
    else:
        desc = REGISTRY.lookup_source(node.name, None, Dialect.NUMEXPR)
    if desc is None:
        return node.name
    spelling = REGISTRY.render(desc, target)
    if spelling is None:
        raise UnsupportedConstruct(
            node, target, f"function {node.qualified_name} ({desc.canonical}) has no {target} spelling"
        )
    return spelling


def restore_logical(node: AstNode) -> AstNode:
    """Undo the logical-to-elementwise operator mapping where it applied.

    ``&``/``|`` whose operands are both boolean-valued (comparisons or
    logical operators) become ``&&``/``||`` and ``~`` over a boolean-valued
    operand becomes ``!``. Used to compare numexpr/python emissions
    against the original tree's scalar semantics.
    """
    if isinstance(node, UnaryOp):
        operand = restore_logical(node.operand)
        op = "!" if node.op == "~" and _is_boolean(operand) else node.op
        return UnaryOp(op, operand)
    if isinstance(node, BinaryOp):
        left, right = restore_logical(node.left), restore_logical(node.right)
        op = node.op
        if op in ("&", "|") and _is_boolean(left) and _is_boolean(right):
            op = op * 2
        return BinaryOp(op, left, right)
    if isinstance(node, Call):
        return Call(node.namespace, node.name, tuple(restore_logical(a) for a in node.args))
    if isinstance(node, Matrix):
        return Matrix(restore_logical(node.base), tuple(restore_logical(s) for s in node.slices))
    if isinstance(node, Slice):
        return node if isinstance(node.index, Empty) else Slice(restore_logical(node.index))
    return node


def _is_boolean(node: AstNode) -> bool:
    if isinstance(node, BinaryOp):
        return node.op in ("==", "!=", "<", "<=", ">", ">=", "&&", "||")
    return isinstance(node, UnaryOp) and node.op == "!"
