"""Translate expressions between ROOT TTreeFormula, numexpr and python syntax.

    >>> from treexpr import from_root
    >>> from_root("TMath::Sqrt(px*px + py*py)").to_numexpr()
    'sqrt(((px)*(px))+((py)*(py)))'
"""

__version__ = "0.1.0"

from .errors import (
    Dialect, DomainError, EmitError, EvalError, NonIntegralBitwiseOperand,
    ParseError, SourcePosition, UnboundSymbol, UnknownFunction,
    UnknownFunctionCall, UnsupportedConstruct,
)
from .nodes import (
    MULTI_OUT, AstNode, BinaryOp, Call, Empty, Literal, Matrix, Slice, Symbol,
    UnaryOp, ast_equal, multi_out,
)
from .lexer import Token, tokenize
from .grammar import from_numexpr, from_root, parse
from .functions import REGISTRY, FunctionDescriptor, lookup_source, render
from .emit import emit
from .evaluate import evaluate
from .sexpr import from_sexpr, to_sexpr


def to_root(node):
    return emit(node, Dialect.ROOT)


def to_numexpr(node):
    return emit(node, Dialect.NUMEXPR)


def to_python(node):
    return emit(node, Dialect.PYTHON)


def convert(text, source, target):
    """Parse ``text`` in ``source`` and emit it in ``target``."""
    return emit(parse(text, source), target)
