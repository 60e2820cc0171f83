"""
Diagnostics
===========

Parse errors carry a position and the set of tokens that would have been
accepted. The numexpr parser names root-only operators explicitly.
"""

from treexpr import ParseError, parse

bad = [
    ("root", "pt > 30 &&"),
    ("root", "TMath::Sqrt(px, )"),
    ("root", "a $ b"),
    ("numexpr", "pt > 30 && eta < 2"),
    ("numexpr", "TMath::Sqrt(x)"),
    ("numexpr", "x +\n  !y"),
    ("numexpr", "jet_pt[0]"),
]

for dialect, text in bad:
    try:
        parse(text, dialect)
    except ParseError as exc:
        print(f"[{dialect}] {text!r}")
        print(f"    {exc.message}")
        print(f"    found={exc.found!r} offset={exc.position.offset}")
