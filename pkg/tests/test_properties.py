import math

from hypothesis import HealthCheck, assume, given, settings, strategies as st

from treexpr import (
    EmitError, EvalError, UnsupportedConstruct, ast_equal, emit, evaluate, parse, tokenize,
)
from treexpr.emit import restore_logical
from treexpr.nodes import is_multi_out

from treegen import TreeGen, numexpr_exprs, random_env, root_exprs, root_trees, whitespace

SETTINGS = settings(max_examples=300, deadline=None, suppress_health_check=[HealthCheck.too_slow])


def close(a, b, rel=1e-12):
    return a == b or math.isclose(a, b, rel_tol=rel, abs_tol=0.0)


@SETTINGS
@given(root_trees)
def test_root_round_trip(tree):
    text = emit(tree, "root")
    assert ast_equal(parse(text, "root"), tree)


@SETTINGS
@given(numexpr_exprs)
def test_numexpr_round_trip(tree):
    text = emit(tree, "numexpr")
    assert ast_equal(parse(text, "numexpr"), tree)


@SETTINGS
@given(numexpr_exprs)
def test_numexpr_text_is_root_text(tree):
    text = emit(tree, "numexpr")
    assert ast_equal(parse(text, "root"), parse(text, "numexpr"))


@SETTINGS
@given(root_trees)
def test_emission_deterministic(tree):
    for target in ("root", "numexpr", "python"):
        try:
            first = emit(tree, target)
        except EmitError:
            continue
        assert emit(tree, target) == first


@SETTINGS
@given(root_exprs)
def test_parentheses_add_no_node(tree):
    text = emit(tree, "root")
    assert ast_equal(parse("(" + text + ")"), parse(text))
    assert ast_equal(parse("((" + text + "))"), parse(text))


@SETTINGS
@given(root_trees, st.data())
def test_whitespace_between_tokens_is_ignored(tree, data):
    text = emit(tree, "root")
    tokens = tokenize(text, "root")
    pieces = []
    for tok in tokens:
        pieces.append(data.draw(whitespace))
        pieces.append(tok.lexeme)
    pieces.append(data.draw(whitespace))
    spaced = "".join(pieces)
    # guard: the spaced text must lex to the same lexemes
    assume([t.lexeme for t in tokenize(spaced, "root")] == [t.lexeme for t in tokens])
    assert ast_equal(parse(spaced, "root"), tree)


@SETTINGS
@given(root_trees)
def test_compact_emission_reparses(tree):
    # removing every optional space from the emitted text keeps the tree
    text = emit(tree, "root")
    tokens = tokenize(text, "root")
    joined = ""
    for tok in tokens:
        glue = joined and (joined[-1].isalnum() or joined[-1] in "._") and (tok.lexeme[0].isalnum() or tok.lexeme[0] in "._")
        joined += (" " if glue else "") + tok.lexeme
    assume([t.lexeme for t in tokenize(joined, "root")] == [t.lexeme for t in tokens])
    assert ast_equal(parse(joined), tree)


@SETTINGS
@given(root_trees)
def test_parse_is_deterministic(tree):
    text = emit(tree, "root")
    assert parse(text) == parse(text)


@SETTINGS
@given(st.integers(0, 2**32 - 1))
def test_cross_dialect_semantics(seed):
    gen = TreeGen(seed)
    tree = gen.tree(6)
    env = random_env(gen.rng)
    reparsed = parse(emit(tree, "root"))
    try:
        want = evaluate(tree, env)
    except EvalError as exc:
        # the reparsed tree must fail the same way
        try:
            evaluate(reparsed, env)
        except EvalError as again:
            assert type(again) is type(exc)
            return
        raise AssertionError("reparsed tree evaluated where the original failed")
    assert close(evaluate(reparsed, env), want)
    try:
        text = emit(tree, "numexpr")
    except UnsupportedConstruct:
        return
    back = restore_logical(parse(text, "numexpr"))
    assert close(evaluate(back, env), want)


@SETTINGS
@given(root_trees)
def test_multi_output_only_at_top(tree):
    parsed = parse(emit(tree, "root"))
    assert is_multi_out(parsed) == is_multi_out(tree)
