import csv
import inspect
import io

import numpy as np
import pytest

from treexpr import REGISTRY, lookup_source, render
from treexpr.functions import COLUMNS, SEMANTICS, Registry, load_table_text, parse_table
from treexpr.nodes import NAME_RE


def test_sqrt_lookups():
    assert lookup_source("Sqrt", "TMath", "root").canonical == "sqrt"
    assert lookup_source("sqrt", None, "numexpr").canonical == "sqrt"
    assert lookup_source("MyFunc", None, "root") is None
    assert lookup_source("Sqrt", None, "root") is None
    assert lookup_source("sqrt", "TMath", "numexpr") is None


def test_sqrt_renders():
    sqrt = REGISTRY["sqrt"]
    assert render(sqrt, "root") == "TMath::Sqrt"
    assert render(sqrt, "numexpr") == "sqrt"
    assert render(sqrt, "python") == "sqrt"


def test_missing_column_is_unsupported():
    assert render(REGISTRY["power"], "numexpr") is None


def test_seed_table_contents():
    assert {d.canonical for d in REGISTRY} == {
        "sqrt", "abs", "sin", "cos", "tan", "asin", "acos", "atan", "atan2",
        "sinh", "cosh", "tanh", "exp", "log", "log10", "power", "min", "max",
    }
    for d in REGISTRY:
        assert d.root_spelling.startswith("TMath::")
    for name in ("asin", "acos", "atan", "atan2"):
        assert REGISTRY[name].numexpr_spelling == "arc" + name[1:]


# schema of the shipped data file


def test_table_schema():
    text = load_table_text()
    rows = list(csv.reader(io.StringIO(text)))
    assert tuple(rows[0]) == COLUMNS
    body = rows[1:]
    assert all(len(r) == len(COLUMNS) for r in body)
    for canonical, arity, root, numexpr, python in body:
        assert NAME_RE.match(canonical)
        assert arity.isdigit()
        ns, sep, name = root.rpartition("::")
        assert NAME_RE.match(name) and (not sep or NAME_RE.match(ns))
        for plain in (numexpr, python):
            assert plain == "" or NAME_RE.match(plain)
    for col in range(len(COLUMNS)):
        values = [r[col] for r in body if r[col] and col != 1]
        assert len(values) == len(set(values))


def test_arity_matches_semantics():
    for d in REGISTRY:
        params = inspect.signature(d.semantics.__wrapped__).parameters
        assert len(params) == d.arity, d.canonical


@pytest.mark.parametrize("text,message", [
    ("name,arity,root,numexpr,python\n", "header"),
    ("canonical,arity,root,numexpr,python\nnope,1,TMath::Nope,,\n", "semantics"),
    ("canonical,arity,root,numexpr,python\nsqrt,1,,sqrt,sqrt\n", "root spelling"),
])
def test_table_parser_rejects_bad_rows(text, message):
    with pytest.raises(ValueError, match=message):
        parse_table(text)


def test_registry_rejects_duplicate_spellings():
    rows = parse_table(
        "canonical,arity,root,numexpr,python\n"
        "sqrt,1,TMath::Sqrt,sqrt,sqrt\n"
        "abs,1,TMath::Abs,sqrt,abs\n"
    )
    with pytest.raises(ValueError, match="duplicate numexpr"):
        Registry(rows)


def test_round_trip_through_spellings():
    for d in REGISTRY:
        ns, _, name = d.root_spelling.rpartition("::")
        assert lookup_source(name, ns or None, "root") is d
        if d.numexpr_spelling:
            assert lookup_source(d.numexpr_spelling, None, "numexpr") is d


def test_numexpr_spellings_exist_in_numexpr():
    numexpr = pytest.importorskip("numexpr")
    from numexpr.expressions import functions
    for d in REGISTRY:
        if d.numexpr_spelling:
            assert d.numexpr_spelling in functions, d.numexpr_spelling
    assert "power" not in functions


def test_python_spellings_are_numpy_ufuncs():
    for d in REGISTRY:
        assert isinstance(getattr(np, d.python_spelling), np.ufunc), d.python_spelling


# semantics against numpy on a 100-point grid

GRIDS = {
    "sqrt": np.linspace(0, 100, 100),
    "log": np.linspace(0.01, 100, 100),
    "log10": np.linspace(0.01, 100, 100),
    "asin": np.linspace(-1, 1, 100),
    "acos": np.linspace(-1, 1, 100),
    "tan": np.linspace(-1.5, 1.5, 100),
    "exp": np.linspace(-20, 20, 100),
    "sinh": np.linspace(-20, 20, 100),
    "cosh": np.linspace(-20, 20, 100),
}
NUMPY = {
    "sqrt": np.sqrt, "abs": np.abs, "sin": np.sin, "cos": np.cos, "tan": np.tan,
    "asin": np.arcsin, "acos": np.arccos, "atan": np.arctan, "atan2": np.arctan2,
    "sinh": np.sinh, "cosh": np.cosh, "tanh": np.tanh, "exp": np.exp,
    "log": np.log, "log10": np.log10, "power": np.power, "min": np.minimum,
    "max": np.maximum,
}


@pytest.mark.parametrize("canonical", sorted(NUMPY))
def test_semantics_agree_with_numpy(canonical):
    fn = SEMANTICS[canonical]
    xs = GRIDS.get(canonical, np.linspace(-10, 10, 100))
    if REGISTRY[canonical].arity == 1:
        got = np.array([fn(float(x)) for x in xs])
        want = NUMPY[canonical](xs)
    else:
        ys = np.linspace(0.5, 3, 100)
        if canonical == "power":
            xs = np.linspace(0.1, 10, 100)
        got = np.array([fn(float(x), float(y)) for x, y in zip(xs, ys)])
        want = NUMPY[canonical](xs, ys)
    np.testing.assert_allclose(got, want, rtol=1e-12, atol=0)


def test_domain_errors_surface():
    with pytest.raises(ArithmeticError):
        SEMANTICS["sqrt"](-1.0)
    with pytest.raises(ArithmeticError):
        SEMANTICS["log"](0.0)
    with pytest.raises(ArithmeticError):
        SEMANTICS["exp"](1e6)
