"""
Parse time against input length
===============================

The base expression is repeated with " + " between copies and parsed at
each size. A slope near 1 on the log-log fit means linear time.
"""

import sys

import numpy as np

from treexpr.bench import DEFAULT_BASE, loglog_slope, run_bench, write_csv

repeats = [2 ** i for i in range(10)]
records = run_bench(DEFAULT_BASE, repeats, trials=5)
write_csv(records, sys.stdout)

chars = np.array([r.chars for r in records], dtype=float)
seconds = np.array([r.seconds for r in records])
print("slope (statistics):", round(loglog_slope(records), 3))
print("slope (np.polyfit):", round(np.polyfit(np.log(chars), np.log(seconds), 1)[0], 3))
print("microseconds per character:", np.round(seconds / chars * 1e6, 3))
