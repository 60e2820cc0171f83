"""Parse-time scaling benchmark.

A base expression is repeated ``k`` times, joined by ``" + "``, and the
parse of each resulting string is timed. With a linear-time parser the
slope of log(seconds) against log(chars) stays close to 1.
"""

from __future__ import annotations

import csv
import math
import statistics
import time
from dataclasses import astuple, dataclass, fields
from typing import Iterable, Sequence

from .errors import Dialect
from .grammar import parse

DEFAULT_BASE = "((weight * (n_mu > 0)) * ((tt_cat + tt_cat + tt_cat)))"
JOINER = " + "
DEFAULT_REPEATS = tuple(2 ** i for i in range(9))  # 1 .. 256
CSV_COLUMNS = ("repeats", "chars", "seconds", "trials")


@dataclass(frozen=True)
class BenchRecord:
    repeats: int
    chars: int
    seconds: float  # median wall time over trials
    trials: int


def build_input(base: str, repeats: int) -> str:
    if repeats < 1:
        raise ValueError(f"repeats must be positive, got {repeats}")
    return JOINER.join([base] * repeats)


def time_parse(text: str, trials: int, dialect=Dialect.ROOT) -> float:
    parse(text, dialect)  # warm-up, discarded
    samples = []
    for _ in range(trials):
        t0 = time.perf_counter()
        parse(text, dialect)
        samples.append(time.perf_counter() - t0)
    return statistics.median(samples)


def run_bench(base: str = DEFAULT_BASE, repeat_set: Iterable[int] = DEFAULT_REPEATS,
              trials: int = 5, dialect=Dialect.ROOT) -> list[BenchRecord]:
    repeat_set = sorted(set(repeat_set))
    if not repeat_set:
        raise ValueError("repeat_set must not be empty")
    if trials < 1:
        raise ValueError(f"trials must be positive, got {trials}")
    parse(base, dialect)  # fail fast on an invalid base
    records = []
    for k in repeat_set:
        text = build_input(base, k)
        records.append(BenchRecord(k, len(text), time_parse(text, trials, dialect), trials))
    return records


def loglog_slope(records: Sequence[BenchRecord]) -> float:
    """Least-squares slope of log(seconds) versus log(chars)."""
    xs = [math.log(r.chars) for r in records]
    ys = [math.log(r.seconds) for r in records]
    return statistics.linear_regression(xs, ys).slope


def write_csv(records: Sequence[BenchRecord], stream) -> None:
    writer = csv.writer(stream, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for r in records:
        writer.writerow(astuple(r))


def read_csv(stream) -> list[BenchRecord]:
    reader = csv.DictReader(stream)
    if tuple(reader.fieldnames or ()) != CSV_COLUMNS:
        raise ValueError(f"expected columns {CSV_COLUMNS}, got {reader.fieldnames}")
    types = {f.name: f.type for f in fields(BenchRecord)}
    conv = {"int": int, "float": float}
    return [BenchRecord(**{k: conv[types[k]](v) for k, v in row.items()}) for row in reader]
