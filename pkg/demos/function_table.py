"""
The function table
==================

Function names differ between dialects. The table shipped with the package
maps each known function to its spelling in every dialect.
"""

from treexpr import REGISTRY, lookup_source

print(f"{'canonical':10s} {'arity':>5s}  {'root':14s} {'numexpr':10s} python")
for desc in REGISTRY:
    print(f"{desc.canonical:10s} {desc.arity:5d}  {desc.root_spelling:14s} "
          f"{desc.numexpr_spelling or '-':10s} {desc.python_spelling or '-'}")

desc = lookup_source("ASin", "TMath", "root")
print(desc.canonical, desc.spelling("numexpr"), desc.semantics(0.5))
print(lookup_source("arcsin", None, "numexpr") is desc)
print(lookup_source("Frobnicate", "TMath", "root"))
