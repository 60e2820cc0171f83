"""Tokenizer shared by both parseable dialects.

Both dialects lex the same token set. Operators that only the root dialect
accepts (``::``, ``&&``, ``[`` ...) are still produced as tokens when
lexing numexpr text, so that the numexpr parser can reject them with a
diagnostic that names the lexeme instead of a generic character error.
"""

from __future__ import annotations

import re
from typing import Iterator, NamedTuple

from .errors import Dialect, ParseError, SourcePosition, as_dialect

NAME = "NAME"
NUMBER = "NUMBER"
OPERATOR = "OPERATOR"
PUNCT = "PUNCT"
CATEGORIES = frozenset({NAME, NUMBER, OPERATOR, PUNCT})

OPERATORS = (
    "**", "<<", ">>", "<=", ">=", "==", "!=", "&&", "||",
    "+", "-", "*", "/", "%", "<", ">", "&", "|", "^", "~", "!", ":",
)
PUNCTUATION = ("::", "(", ")", "[", "]", ",")

_ops = sorted(OPERATORS + PUNCTUATION, key=len, reverse=True)
_LEXER = re.compile(
    r"(?P<ws>[ \t\r\n]+)"
    r"|(?P<number>(?:[0-9]+\.?[0-9]*|\.[0-9]+)(?:[eE][+-]?[0-9]+)?)"
    r"|(?P<name>[A-Za-z_][A-Za-z0-9_]*)"
    r"|(?P<op>" + "|".join(re.escape(o) for o in _ops) + r")"
    r"|(?P<bad>.)",
    re.DOTALL,
)
_PUNCT = frozenset(PUNCTUATION)


class Token(NamedTuple):
    lexeme: str
    category: str
    position: SourcePosition

    @property
    def terminal(self) -> str:
        """Grammar terminal: the category for NAME/NUMBER, else the lexeme."""
        if self.category in (NAME, NUMBER):
            return self.category
        return self.lexeme


def iter_tokens(text: str) -> Iterator[Token]:
    line = 1
    line_start = 0
    for m in _LEXER.finditer(text):
        kind = m.lastgroup
        start = m.start()
        if kind == "ws":
            ws = m.group()
            nl = ws.count("\n")
            if nl:
                line += nl
                line_start = start + ws.rindex("\n") + 1
            continue
        pos = SourcePosition(start, line, start - line_start + 1)
        lexeme = m.group()
        if kind == "number":
            yield Token(lexeme, NUMBER, pos)
        elif kind == "name":
            yield Token(lexeme, NAME, pos)
        elif kind == "op":
            yield Token(lexeme, PUNCT if lexeme in _PUNCT else OPERATOR, pos)
        else:
            raise ParseError(
                pos, lexeme, CATEGORIES,
                f"unexpected character {lexeme!r}; expected one of "
                + ", ".join(sorted(CATEGORIES)),
            )


def tokenize(text: str, source: Dialect | str = Dialect.ROOT) -> list[Token]:
    """Split ``text`` into tokens, raising ParseError on a stray character."""
    if not as_dialect(source).parseable:
        raise ValueError(f"{source} is an emit-only dialect")
    return list(iter_tokens(text))


def end_position(text: str) -> SourcePosition:
    line = text.count("\n") + 1
    return SourcePosition(len(text), line, len(text) - (text.rfind("\n") + 1) + 1)
