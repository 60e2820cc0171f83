"""Debug serialization of trees as s-expressions.

Format (stable; see README.md)::

    (lit LEXEME)              Literal
    (sym NAME)                Symbol
    (OP x)                    UnaryOp       e.g. (- (sym a))
    (OP x y)                  BinaryOp      e.g. (+ (lit 1) (lit 2))
    (call NAME arg...)        Call          NAME may be ns::name or $multi_out
    (matrix base slice...)    Matrix
    (slice index)             Slice
    (empty)                   Empty

With ``indent`` set, each child goes on its own line, indented one level
deeper than its parent. :func:`from_sexpr` reads either layout.
"""

from __future__ import annotations

import re

from .nodes import (
    BINARY_OPS, UNARY_OPS, AstNode, BinaryOp, Call, Empty, Literal, Matrix,
    Slice, Symbol, UnaryOp,
)


def _head(node: AstNode) -> tuple[str, tuple]:
    if isinstance(node, Literal):
        return f"lit {node.lexeme}", ()
    if isinstance(node, Symbol):
        return f"sym {node.name}", ()
    if isinstance(node, (UnaryOp, BinaryOp)):
        return node.op, node.children()
    if isinstance(node, Call):
        return f"call {node.qualified_name}", node.args
    if isinstance(node, Matrix):
        return "matrix", node.children()
    if isinstance(node, Slice):
        return "slice", (node.index,)
    if isinstance(node, Empty):
        return "empty", ()
    raise TypeError(f"not an AstNode: {node!r}")


def to_sexpr(node: AstNode, indent: int | None = None) -> str:
    head, kids = _head(node)
    if not kids:
        return f"({head})"
    if indent is None:
        return "(" + " ".join([head] + [to_sexpr(k) for k in kids]) + ")"
    lines = [f"({head}"]
    for k in kids:
        sub = to_sexpr(k, indent).splitlines()
        lines.extend(" " * indent + s for s in sub)
    lines[-1] += ")"
    return "\n".join(lines)


_TOKEN = re.compile(r"\s*(?:(\()|(\))|([^\s()]+))")


def from_sexpr(text: str) -> AstNode:
    tokens = []
    pos = 0
    text = text.rstrip()
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m:
            raise ValueError(f"bad s-expression near offset {pos}")
        tokens.append(m.group(1) or m.group(2) or m.group(3))
        pos = m.end()
    node, rest = _read(tokens, 0)
    if rest != len(tokens):
        raise ValueError("trailing text after s-expression")
    return node


def _read(tokens, i):
    if i >= len(tokens) or tokens[i] != "(":
        raise ValueError("expected '('")
    head = tokens[i + 1]
    i += 2
    atoms = []
    kids = []
    while tokens[i] != ")":
        if tokens[i] == "(":
            kid, i = _read(tokens, i)
            kids.append(kid)
        else:
            atoms.append(tokens[i])
            i += 1
    i += 1
    if head == "lit":
        return Literal(atoms[0]), i
    if head == "sym":
        return Symbol(atoms[0]), i
    if head == "empty":
        return Empty(), i
    if head == "slice":
        return Slice(kids[0]), i
    if head == "matrix":
        return Matrix(kids[0], tuple(kids[1:])), i
    if head == "call":
        ns, sep, name = atoms[0].rpartition("::")
        return Call(ns if sep else None, name, tuple(kids)), i
    if len(kids) == 1 and head in UNARY_OPS:
        return UnaryOp(head, kids[0]), i
    if len(kids) == 2 and head in BINARY_OPS:
        return BinaryOp(head, kids[0], kids[1]), i
    raise ValueError(f"unknown s-expression head {head!r} with {len(kids)} children")
