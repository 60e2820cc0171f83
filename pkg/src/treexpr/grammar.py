"""Grammars for the root (TTreeFormula) and numexpr dialects.

Precedence ladder, loosest first; binary levels are left-associative and
``**`` is right-associative::

    multi_out  : expr (":" expr)*                 root only, top level only
    or         : or "||" and                      root only
    and        : and "&&" bit_or                  root only
    bit_or     : bit_or "|" bit_xor
    bit_xor    : bit_xor "^" bit_and
    bit_and    : bit_and "&" equality
    equality   : equality ("==" | "!=") relational
    relational : relational ("<" | "<=" | ">" | ">=") shift
    shift      : shift ("<<" | ">>") additive
    additive   : additive ("+" | "-") term
    term       : term ("*" | "/" | "%") unary      "%" root only
    unary      : ("+" | "-" | "~" | "!") unary     "!" root only
    power      : postfix "**" unary
    postfix    : primary ("[" expr? "]")*         subscripts root only
    primary    : atom | NAME "(" args? ")" | NAME "::" NAME "(" args? ")"
    atom       : NUMBER | NAME | "(" expr ")"

The numexpr grammar is the same ladder with every root-only alternative
removed, and shares the semantic actions, so any numexpr expression builds
the identical tree under either grammar.
"""

from __future__ import annotations

from functools import lru_cache

from . import _lalr
from .errors import END_OF_INPUT, Dialect, ParseError, as_dialect
from .lexer import iter_tokens, end_position
from .nodes import (
    AstNode, BinaryOp, Call, Empty, Literal, Matrix, Slice, Symbol, UnaryOp,
    multi_out,
)
from ._lalr import Production as P

# the multiple-output separator, isolated here on purpose
MULTI_OUT_TOKEN = ":"

_ROOT_ONLY = frozenset({"||", "&&", "!", "%", "::", "[", "]", MULTI_OUT_TOKEN})


def _binary(left, op, right):
    return BinaryOp(op.lexeme, left, right)


def _unary(op, operand):
    return UnaryOp(op.lexeme, operand)


def _ladder(tiers, top):
    prods = [P("expr", (top,))]
    for lower, (name, ops) in zip([t[0] for t in tiers[1:]] + ["unary"], tiers):
        prods.append(P(name, (lower,)))
        for op in ops:
            prods.append(P(name, (name, op, lower), _binary))
    return prods


def _productions(dialect: Dialect) -> list[P]:
    root = dialect is Dialect.ROOT
    tiers = [
        ("bit_or", ["|"]),
        ("bit_xor", ["^"]),
        ("bit_and", ["&"]),
        ("equality", ["==", "!="]),
        ("relational", ["<", "<=", ">", ">="]),
        ("shift", ["<<", ">>"]),
        ("additive", ["+", "-"]),
        ("term", ["*", "/", "%"] if root else ["*", "/"]),
    ]
    if root:
        tiers = [("or", ["||"]), ("and", ["&&"])] + tiers
    prods = _ladder(tiers, tiers[0][0])

    for op in ("+", "-", "~") + (("!",) if root else ()):
        prods.append(P("unary", (op, "unary"), _unary))
    prods += [
        P("unary", ("power",)),
        P("power", ("postfix",)),
        P("power", ("postfix", "**", "unary"), _binary),
        P("primary", ("atom",)),
        P("primary", ("NAME", "(", ")"), lambda n, lp, rp: Call(None, n.lexeme, ())),
        P("primary", ("NAME", "(", "args", ")"),
          lambda n, lp, a, rp: Call(None, n.lexeme, tuple(a))),
        P("atom", ("NUMBER",), lambda t: Literal(t.lexeme)),
        P("atom", ("NAME",), lambda t: Symbol(t.lexeme)),
        P("atom", ("(", "expr", ")"), lambda lp, e, rp: e),
        P("args", ("expr",), lambda e: [e]),
        P("args", ("args", ",", "expr"), lambda a, c, e: a + [e]),
    ]
    if not root:
        prods += [
            P("postfix", ("primary",)),
            P("start", ("expr",)),
        ]
        return prods

    prods += [
        P("primary", ("NAME", "::", "NAME", "(", ")"),
          lambda ns, s, n, lp, rp: Call(ns.lexeme, n.lexeme, ())),
        P("primary", ("NAME", "::", "NAME", "(", "args", ")"),
          lambda ns, s, n, lp, a, rp: Call(ns.lexeme, n.lexeme, tuple(a))),
        P("postfix", ("primary",)),
        P("postfix", ("primary", "subscripts"), lambda b, s: Matrix(b, tuple(s))),
        P("subscripts", ("subscript",), lambda s: [s]),
        P("subscripts", ("subscripts", "subscript"), lambda ss, s: ss + [s]),
        P("subscript", ("[", "expr", "]"), lambda lb, e, rb: Slice(e)),
        P("subscript", ("[", "]"), lambda lb, rb: Slice(Empty())),
        P("start", ("outputs",),
          lambda outs: outs[0] if len(outs) == 1 else multi_out(*outs)),
        P("outputs", ("expr",), lambda e: [e]),
        P("outputs", ("outputs", MULTI_OUT_TOKEN, "expr"), lambda o, c, e: o + [e]),
    ]
    return prods


def tables(dialect: Dialect | str) -> _lalr.Tables:
    """Parse tables for ``dialect``, built once and shared read-only."""
    return _tables(as_dialect(dialect))


@lru_cache(maxsize=None)
def _tables(dialect: Dialect) -> _lalr.Tables:
    return _lalr.build_tables(_productions(dialect), "start")


_DISPLAY = {_lalr.END: "end of input", "NAME": "NAME", "NUMBER": "NUMBER"}


def _expected_names(terminals) -> frozenset[str]:
    return frozenset(_DISPLAY.get(t, repr(t)) for t in terminals)


_END = object()


def parse(text: str, source: Dialect | str = Dialect.ROOT) -> AstNode:
    """Parse ``text`` written in ``source`` (root or numexpr) into a tree."""
    dialect = as_dialect(source)
    if not dialect.parseable:
        raise ValueError(f"{dialect} is an emit-only dialect; parse root or numexpr")
    tab = tables(dialect)
    try:
        return _lalr.run(tab, iter_tokens(text), _terminal, _END)
    except _lalr.SyntaxFailure as exc:
        tok, expected = exc.token, _expected_names(exc.expected)
        if tok is _END:
            raise ParseError(end_position(text), END_OF_INPUT, expected) from None
        detail = None
        if dialect is Dialect.NUMEXPR and tok.lexeme in _ROOT_ONLY:
            detail = (f"unexpected {tok.lexeme!r} (root only, not available in numexpr); "
                      f"expected one of {', '.join(sorted(expected))}")
        raise ParseError(tok.position, tok.lexeme, expected, detail) from None


def _terminal(tok):
    return tok.terminal


def from_root(text: str) -> AstNode:
    return parse(text, Dialect.ROOT)


def from_numexpr(text: str) -> AstNode:
    return parse(text, Dialect.NUMEXPR)
