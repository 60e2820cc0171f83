"""LALR(1) table construction and a table-driven shift/reduce driver.

Tables are built from an LR(0) automaton whose kernel items are then
decorated with lookaheads by fixpoint propagation. Any shift/reduce or
reduce/reduce conflict is a grammar bug and raises :class:`GrammarError`
at construction time, so a successfully built table is deterministic.
"""

from __future__ import annotations

from collections import defaultdict
from typing import Callable, Iterable, NamedTuple, Sequence

END = "$END"
_START = "$start"


class GrammarError(Exception):
    pass


class Production(NamedTuple):
    lhs: str
    rhs: tuple[str, ...]
    action: Callable | None = None


class Tables(NamedTuple):
    # action[state][terminal]: >= 0 shift to state, < 0 reduce production ~a
    # (production 0 is the augmented start rule, so ~0 == -1 means accept)
    action: tuple[dict[str, int], ...]
    goto: tuple[dict[str, int], ...]
    productions: tuple[Production, ...]
    terminals: frozenset[str]


def build_tables(productions: Sequence[Production], start: str) -> Tables:
    prods = (Production(_START, (start,)),) + tuple(productions)
    nonterminals = {p.lhs for p in prods}
    terminals = {s for p in prods for s in p.rhs if s not in nonterminals} | {END}
    by_lhs: dict[str, list[int]] = defaultdict(list)
    for i, p in enumerate(prods):
        by_lhs[p.lhs].append(i)
    for p in prods:
        for s in p.rhs:
            if s in nonterminals and s not in by_lhs:
                raise GrammarError(f"nonterminal {s!r} has no productions")

    nullable, first = _first_sets(prods, nonterminals)

    def first_of(seq: Sequence[str], tail: frozenset[str] | set[str]) -> set[str]:
        out: set[str] = set()
        for s in seq:
            if s not in nonterminals:
                out.add(s)
                return out
            out |= first[s]
            if s not in nullable:
                return out
        out |= tail
        return out

    # LR(0) automaton over kernel item sets
    def closure0(kernel: Iterable[tuple[int, int]]) -> set[tuple[int, int]]:
        items = set(kernel)
        work = list(items)
        while work:
            p, d = work.pop()
            rhs = prods[p].rhs
            if d < len(rhs) and rhs[d] in nonterminals:
                for q in by_lhs[rhs[d]]:
                    if (q, 0) not in items:
                        items.add((q, 0))
                        work.append((q, 0))
        return items

    kernels: list[frozenset[tuple[int, int]]] = [frozenset({(0, 0)})]
    index = {kernels[0]: 0}
    transitions: list[dict[str, int]] = []
    i = 0
    while i < len(kernels):
        moves: dict[str, set[tuple[int, int]]] = defaultdict(set)
        for p, d in closure0(kernels[i]):
            rhs = prods[p].rhs
            if d < len(rhs):
                moves[rhs[d]].add((p, d + 1))
        row: dict[str, int] = {}
        for sym in sorted(moves):
            k = frozenset(moves[sym])
            if k not in index:
                index[k] = len(kernels)
                kernels.append(k)
            row[sym] = index[k]
        transitions.append(row)
        i += 1

    # lookahead propagation to a fixpoint
    la: dict[tuple[int, tuple[int, int]], set[str]] = defaultdict(set)
    la[0, (0, 0)].add(END)
    closures: list[dict[tuple[int, int], set[str]]] = [{} for _ in kernels]
    changed = True
    while changed:
        changed = False
        for s, kernel in enumerate(kernels):
            items = {it: set(la[s, it]) for it in kernel}
            work = list(kernel)
            while work:
                p, d = work.pop()
                rhs = prods[p].rhs
                if d < len(rhs) and rhs[d] in nonterminals:
                    follow = first_of(rhs[d + 1:], items[p, d])
                    for q in by_lhs[rhs[d]]:
                        cur = items.setdefault((q, 0), set())
                        if not follow <= cur:
                            cur |= follow
                            work.append((q, 0))
            closures[s] = items
            for (p, d), lookahead in items.items():
                rhs = prods[p].rhs
                if d < len(rhs):
                    target = la[transitions[s][rhs[d]], (p, d + 1)]
                    if not lookahead <= target:
                        target |= lookahead
                        changed = True

    action: list[dict[str, int]] = []
    goto: list[dict[str, int]] = []
    for s, items in enumerate(closures):
        arow: dict[str, int] = {}
        grow: dict[str, int] = {}
        for sym, t in transitions[s].items():
            if sym in nonterminals:
                grow[sym] = t
            else:
                arow[sym] = t
        for (p, d), lookahead in sorted(items.items()):
            if d != len(prods[p].rhs):
                continue
            for tok in lookahead:
                prev = arow.get(tok)
                if prev is not None and prev != ~p:
                    kind = "shift/reduce" if prev >= 0 else "reduce/reduce"
                    raise GrammarError(
                        f"{kind} conflict in state {s} on {tok!r} "
                        f"(reducing {prods[p].lhs} -> {' '.join(prods[p].rhs)})"
                    )
                arow[tok] = ~p
        action.append(arow)
        goto.append(grow)

    return Tables(tuple(action), tuple(goto), prods, frozenset(terminals))


def _first_sets(prods, nonterminals):
    nullable: set[str] = set()
    first: dict[str, set[str]] = {n: set() for n in nonterminals}
    changed = True
    while changed:
        changed = False
        for lhs, rhs, _ in prods:
            before = len(first[lhs])
            all_nullable = True
            for s in rhs:
                if s not in nonterminals:
                    first[lhs].add(s)
                    all_nullable = False
                    break
                first[lhs] |= first[s]
                if s not in nullable:
                    all_nullable = False
                    break
            if all_nullable and lhs not in nullable:
                nullable.add(lhs)
                changed = True
            if len(first[lhs]) != before:
                changed = True
    return nullable, first


class SyntaxFailure(Exception):
    """Raised by :func:`run` when no action exists for the lookahead."""

    def __init__(self, token, expected: frozenset[str]):
        super().__init__(token)
        self.token = token
        self.expected = expected


def run(tables: Tables, tokens: Iterable, terminal_of: Callable, end_token):
    """Drive the automaton over ``tokens``.

    ``terminal_of(token)`` maps each token to its grammar terminal name.
    Terminal values handed to semantic actions are the tokens themselves;
    a production without an action passes through its single child.
    """
    action, goto, prods = tables.action, tables.goto, tables.productions
    states = [0]
    values: list = []
    stream = iter(tokens)
    tok = next(stream, end_token)
    term = END if tok is end_token else terminal_of(tok)
    while True:
        act = action[states[-1]].get(term)
        if act is None:
            raise SyntaxFailure(tok, _viable(tables, states))
        if act >= 0:
            states.append(act)
            values.append(tok)
            tok = next(stream, end_token)
            term = END if tok is end_token else terminal_of(tok)
            continue
        if act == -1:
            return values[-1]
        lhs, rhs, fn = prods[~act]
        n = len(rhs)
        if n:
            args = values[-n:]
            del values[-n:]
            del states[-n:]
        else:
            args = []
        values.append(fn(*args) if fn is not None else args[0])
        states.append(goto[states[-1]][lhs])


def _viable(tables: Tables, states: list[int]) -> frozenset[str]:
    # LALR merging can list terminals that a reduction would later reject;
    # keep only those that reach a shift from the current stack
    action, goto, prods = tables.action, tables.goto, tables.productions
    ok = set()
    for term in action[states[-1]]:
        stack = list(states)
        while True:
            act = action[stack[-1]].get(term)
            if act is None:
                break
            if act >= 0 or act == -1:
                ok.add(term)
                break
            lhs, rhs, _ = prods[~act]
            if rhs:
                del stack[-len(rhs):]
            stack.append(goto[stack[-1]][lhs])
    return frozenset(ok)
