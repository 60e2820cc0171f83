"""The eight node kinds of the expression IR.

Nodes are frozen dataclasses that validate their own shape on construction,
so every tree that exists is well formed:

* ``Empty`` only ever appears as the index of a ``Slice``,
* ``Slice`` only ever appears inside ``Matrix.slices``,
* a multiple-output node (``Call`` named ``MULTI_OUT``) only ever appears
  as the root of a tree.

Literals keep their verbatim source lexeme, and equality is lexeme-level:
``Literal("1e3") != Literal("1000.0")``.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from typing import Optional, Union

NAME_RE = re.compile(r"[A-Za-z_][A-Za-z0-9_]*\Z")
NUMBER_RE = re.compile(r"(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?\Z")

UNARY_OPS = frozenset({"+", "-", "!", "~"})
BINARY_OPS = frozenset(
    {"||", "&&", "|", "^", "&", "==", "!=", "<", "<=", ">", ">=",
     "<<", ">>", "+", "-", "*", "/", "%", "**"}
)

# reserved name for the root-dialect multiple-output construct; "$" can never
# appear in a NAME lexeme so user functions cannot collide with it
MULTI_OUT = "$multi_out"


class AstNode:
    """Base of all node kinds."""

    __slots__ = ()

    def to_root(self) -> str:
        from .emit import emit
        return emit(self, "root")

    def to_numexpr(self) -> str:
        from .emit import emit
        return emit(self, "numexpr")

    def to_python(self) -> str:
        from .emit import emit
        return emit(self, "python")

    def children(self) -> tuple[AstNode, ...]:
        return ()


def _check_expr(node, what):
    if not isinstance(node, AstNode):
        raise TypeError(f"{what} must be an AstNode, got {type(node).__name__}")
    if isinstance(node, (Empty, Slice)):
        raise ValueError(f"{what} cannot be {type(node).__name__}")
    if is_multi_out(node):
        raise ValueError("a multiple-output node may only be the root of a tree")


@dataclass(frozen=True)
class Literal(AstNode):
    lexeme: str
    value: float = field(init=False, compare=False, repr=False)

    def __post_init__(self):
        if not isinstance(self.lexeme, str) or not NUMBER_RE.match(self.lexeme):
            raise ValueError(f"invalid number lexeme {self.lexeme!r}")
        object.__setattr__(self, "value", float(self.lexeme))


@dataclass(frozen=True)
class Symbol(AstNode):
    name: str

    def __post_init__(self):
        if not isinstance(self.name, str) or not NAME_RE.match(self.name):
            raise ValueError(f"invalid symbol name {self.name!r}")


@dataclass(frozen=True)
class UnaryOp(AstNode):
    op: str
    operand: AstNode

    def __post_init__(self):
        if self.op not in UNARY_OPS:
            raise ValueError(f"unknown unary operator {self.op!r}")
        _check_expr(self.operand, "operand")

    def children(self):
        return (self.operand,)


@dataclass(frozen=True)
class BinaryOp(AstNode):
    op: str
    left: AstNode
    right: AstNode

    def __post_init__(self):
        if self.op not in BINARY_OPS:
            raise ValueError(f"unknown binary operator {self.op!r}")
        _check_expr(self.left, "left operand")
        _check_expr(self.right, "right operand")

    def children(self):
        return (self.left, self.right)


@dataclass(frozen=True)
class Call(AstNode):
    namespace: Optional[str]
    name: str
    args: tuple[AstNode, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "args", tuple(self.args))
        if self.name == MULTI_OUT:
            if self.namespace is not None or len(self.args) < 2:
                raise ValueError("multiple-output needs no namespace and at least two outputs")
        elif not isinstance(self.name, str) or not NAME_RE.match(self.name):
            raise ValueError(f"invalid function name {self.name!r}")
        if self.namespace is not None and not NAME_RE.match(self.namespace):
            raise ValueError(f"invalid namespace {self.namespace!r}")
        for a in self.args:
            _check_expr(a, "argument")

    @property
    def qualified_name(self) -> str:
        return self.name if self.namespace is None else f"{self.namespace}::{self.name}"

    def children(self):
        return self.args


@dataclass(frozen=True)
class Empty(AstNode):
    pass


@dataclass(frozen=True)
class Slice(AstNode):
    index: AstNode

    def __post_init__(self):
        if not isinstance(self.index, Empty):
            _check_expr(self.index, "slice index")

    def children(self):
        return (self.index,)


@dataclass(frozen=True)
class Matrix(AstNode):
    base: AstNode
    slices: tuple[Slice, ...]

    def __post_init__(self):
        object.__setattr__(self, "slices", tuple(self.slices))
        _check_expr(self.base, "subscript base")
        if not self.slices:
            raise ValueError("Matrix needs at least one slice")
        for s in self.slices:
            if not isinstance(s, Slice):
                raise TypeError(f"Matrix.slices holds Slice nodes, got {type(s).__name__}")

    def children(self):
        return (self.base,) + self.slices


NODE_KINDS = (Literal, Symbol, UnaryOp, BinaryOp, Call, Matrix, Slice, Empty)

Node = Union[Literal, Symbol, UnaryOp, BinaryOp, Call, Matrix, Slice, Empty]


def is_multi_out(node) -> bool:
    return isinstance(node, Call) and node.name == MULTI_OUT


def multi_out(*outputs: AstNode) -> Call:
    return Call(None, MULTI_OUT, outputs)


def _fields(node):
    # the identity-bearing scalar fields of each kind
    if isinstance(node, Literal):
        return (node.lexeme,)
    if isinstance(node, Symbol):
        return (node.name,)
    if isinstance(node, (UnaryOp, BinaryOp)):
        return (node.op,)
    if isinstance(node, Call):
        return (node.namespace, node.name, len(node.args))
    if isinstance(node, Matrix):
        return (len(node.slices),)
    return ()


def ast_equal(a: AstNode, b: AstNode) -> bool:
    """Structural equality, compared iteratively so deep trees are fine."""
    stack = [(a, b)]
    while stack:
        x, y = stack.pop()
        if type(x) is not type(y) or _fields(x) != _fields(y):
            return False
        stack.extend(zip(x.children(), y.children()))
    return True


def walk(node: AstNode):
    """Yield every node of the tree in pre-order."""
    stack = [node]
    while stack:
        n = stack.pop()
        yield n
        stack.extend(reversed(n.children()))
