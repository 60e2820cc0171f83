"""Dialects, source positions and the exception hierarchy."""

from __future__ import annotations

import enum
from typing import NamedTuple


class Dialect(str, enum.Enum):
    ROOT = "root"
    NUMEXPR = "numexpr"
    PYTHON = "python"

    def __str__(self):
        return self.value

    @property
    def parseable(self) -> bool:
        return self is not Dialect.PYTHON


def as_dialect(value) -> Dialect:
    try:
        return Dialect(value)
    except ValueError:
        choices = ", ".join(d.value for d in Dialect)
        raise ValueError(f"unknown dialect {value!r}; choose from {choices}") from None


class SourcePosition(NamedTuple):
    offset: int  # 0-based
    line: int  # 1-based
    column: int  # 1-based

    def __str__(self):
        return f"{self.line}:{self.column}"


END_OF_INPUT = "<end of input>"


class ParseError(Exception):
    """Syntax or lexical error at a known position in the input.

    ``found`` is the offending lexeme (or ``END_OF_INPUT``) and ``expected``
    is a non-empty frozenset of token-category names that would have been
    accepted at that point. ``message`` is ``"line:column: detail"``.
    """

    def __init__(self, position: SourcePosition, found: str, expected, detail: str | None = None):
        self.position = position
        self.found = found
        self.expected = frozenset(expected)
        if not self.expected:
            raise ValueError("ParseError.expected must be non-empty")
        if detail is None:
            shown = found if found == END_OF_INPUT else repr(found)
            detail = f"unexpected {shown}; expected {_join(self.expected)}"
        self.detail = detail
        self.message = f"{position}: {detail}"
        super().__init__(self.message)


def _join(names) -> str:
    names = sorted(names)
    if len(names) == 1:
        return names[0]
    return "one of " + ", ".join(names)


class EmitError(Exception):
    """A tree cannot be rendered in the requested target dialect."""

    def __init__(self, node, target: Dialect, reason: str):
        self.node = node
        self.target = target
        self.reason = reason
        super().__init__(f"cannot emit to {target}: {reason}")


class UnsupportedConstruct(EmitError):
    pass


class UnknownFunction(EmitError):
    pass


class EvalError(Exception):
    pass


class UnboundSymbol(EvalError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unbound symbol {name!r}")


class NonIntegralBitwiseOperand(EvalError):
    def __init__(self, op: str, value: float):
        self.op = op
        self.value = value
        super().__init__(f"operator {op!r} needs integral operands, got {value!r}")


class UnknownFunctionCall(EvalError):
    def __init__(self, name: str):
        self.name = name
        super().__init__(f"unknown function {name!r}")


class DomainError(EvalError):
    pass
