"""
Scalar evaluation with C semantics
==================================

``evaluate`` computes a tree on plain floats. It is slow and is only
meant as a reference when checking translated strings against each other.
"""

import random

import numpy as np

from treexpr import DomainError, NonIntegralBitwiseOperand, evaluate, parse, to_numexpr

env = {"px": 3.0, "py": 4.0, "n_mu": 2, "weight": 0.5, "tt_cat": 1}

print(evaluate(parse("TMath::Sqrt(px*px + py*py)"), env))
print(evaluate(parse("((weight * (n_mu > 0)) * ((tt_cat + tt_cat + tt_cat)))"), env))

# integer division semantics follow C: % truncates toward zero
print(evaluate(parse("-7 % 3")), evaluate(parse("7 % -3")))

for text in ("5 & 2.5", "TMath::Log(0)", "1 / 0"):
    try:
        evaluate(parse(text))
    except (DomainError, NonIntegralBitwiseOperand) as exc:
        print(f"{text!r}: {type(exc).__name__}: {exc}")

# compare against numpy on the translated string, element by element
rng = random.Random(3)
pts = [(rng.uniform(-5, 5), rng.uniform(-5, 5)) for _ in range(5)]
tree = parse("TMath::Sqrt(px*px + py*py) > 2 && py < 1")
code = to_numexpr(tree)
print(code)
px = np.array([p[0] for p in pts])
py = np.array([p[1] for p in pts])
vectorised = eval(code, {"sqrt": np.sqrt, "px": px, "py": py})
scalar = [evaluate(tree, {"px": a, "py": b}) for a, b in pts]
print(vectorised.astype(float))
print(np.array(scalar))
assert np.array_equal(vectorised.astype(float), scalar)
