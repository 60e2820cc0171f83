"""Catalog of known functions and their spelling in each dialect.

The table lives in ``functions.csv`` next to this module, one row per
function with columns ``canonical,arity,root,numexpr,python``. An empty
cell means the dialect has no spelling for that function. Root spellings
may be namespace-qualified (``TMath::Sqrt``); numexpr and python spellings
are plain names.

Lookups return ``None`` for "not found" / "unsupported"; neither is an
error at this level.
"""

from __future__ import annotations

import csv
import io
import math
from dataclasses import dataclass
from importlib import resources
from typing import Callable, Mapping, Optional

from .errors import Dialect, as_dialect

COLUMNS = ("canonical", "arity", "root", "numexpr", "python")


def _checked(fn, name):
    def wrapped(*args):
        try:
            out = fn(*args)
        except (ValueError, ZeroDivisionError, OverflowError) as exc:
            raise ArithmeticError(f"{name}{args}: {exc}") from None
        return float(out)
    wrapped.__name__ = name
    wrapped.__wrapped__ = fn
    return wrapped


# canonical name -> scalar implementation; raises ArithmeticError off-domain
SEMANTICS: dict[str, Callable[..., float]] = {
    name: _checked(fn, name)
    for name, fn in {
        "sqrt": math.sqrt,
        "abs": math.fabs,
        "sin": math.sin,
        "cos": math.cos,
        "tan": math.tan,
        "asin": math.asin,
        "acos": math.acos,
        "atan": math.atan,
        "atan2": math.atan2,
        "sinh": math.sinh,
        "cosh": math.cosh,
        "tanh": math.tanh,
        "exp": math.exp,
        "log": lambda x: math.log(x),
        "log10": math.log10,
        "power": math.pow,
        "min": lambda a, b: min(a, b),
        "max": lambda a, b: max(a, b),
    }.items()
}


@dataclass(frozen=True)
class FunctionDescriptor:
    canonical: str
    arity: int
    root_spelling: str
    numexpr_spelling: Optional[str]
    python_spelling: Optional[str]
    semantics: Callable[..., float]

    def spelling(self, dialect: Dialect | str) -> Optional[str]:
        return {
            Dialect.ROOT: self.root_spelling,
            Dialect.NUMEXPR: self.numexpr_spelling,
            Dialect.PYTHON: self.python_spelling,
        }[as_dialect(dialect)]


class Registry:
    """Immutable lookup tables over a list of descriptors."""

    def __init__(self, descriptors):
        self.descriptors: tuple[FunctionDescriptor, ...] = tuple(descriptors)
        self._by_canonical: dict[str, FunctionDescriptor] = {}
        self._by_spelling: dict[Dialect, dict[str, FunctionDescriptor]] = {d: {} for d in Dialect}
        for desc in self.descriptors:
            if desc.canonical in self._by_canonical:
                raise ValueError(f"duplicate canonical name {desc.canonical!r}")
            self._by_canonical[desc.canonical] = desc
            for d in Dialect:
                sp = desc.spelling(d)
                if sp is None:
                    continue
                if sp in self._by_spelling[d]:
                    raise ValueError(f"duplicate {d} spelling {sp!r}")
                self._by_spelling[d][sp] = desc

    def __iter__(self):
        return iter(self.descriptors)

    def __len__(self):
        return len(self.descriptors)

    def __getitem__(self, canonical: str) -> FunctionDescriptor:
        return self._by_canonical[canonical]

    def lookup_source(self, spelling: str, namespace: Optional[str], source) -> Optional[FunctionDescriptor]:
        """Descriptor spelled ``namespace::spelling`` in a parse dialect, or None."""
        dialect = as_dialect(source)
        if not dialect.parseable:
            raise ValueError(f"{dialect} is not a parse dialect")
        if namespace is not None:
            if dialect is not Dialect.ROOT:
                return None
            spelling = f"{namespace}::{spelling}"
        return self._by_spelling[dialect].get(spelling)

    def render(self, desc: FunctionDescriptor, target) -> Optional[str]:
        return desc.spelling(target)


def parse_table(text: str, semantics: Mapping[str, Callable] = SEMANTICS) -> list[FunctionDescriptor]:
    reader = csv.DictReader(io.StringIO(text))
    if tuple(reader.fieldnames or ()) != COLUMNS:
        raise ValueError(f"function table header must be {','.join(COLUMNS)}, got {reader.fieldnames}")
    out = []
    for row in reader:
        name = row["canonical"]
        if name not in semantics:
            raise ValueError(f"no semantics for function {name!r}")
        if not row["root"]:
            raise ValueError(f"function {name!r} has no root spelling")
        out.append(FunctionDescriptor(
            canonical=name,
            arity=int(row["arity"]),
            root_spelling=row["root"],
            numexpr_spelling=row["numexpr"] or None,
            python_spelling=row["python"] or None,
            semantics=semantics[name],
        ))
    return out


def load_table_text() -> str:
    return resources.files(__package__).joinpath("functions.csv").read_text(encoding="utf-8")


REGISTRY = Registry(parse_table(load_table_text()))


def lookup_source(spelling: str, namespace: Optional[str], source) -> Optional[FunctionDescriptor]:
    return REGISTRY.lookup_source(spelling, namespace, source)


def render(desc: FunctionDescriptor, target) -> Optional[str]:
    return REGISTRY.render(desc, target)
