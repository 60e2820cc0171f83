"""
Looking at syntax trees
=======================

Parsed expressions are small immutable trees. The s-expression printer is
the easiest way to see how an expression was grouped.
"""

from treexpr import from_numexpr, from_root, parse, to_sexpr, from_sexpr

tree = from_root("TMath::Sqrt(px*px + py*py)")
print(repr(tree))
print(to_sexpr(tree))
print(to_sexpr(tree, indent=2))

# grouping, read off the tree
for text in ("1+2*3", "2**3**2", "-2**2", "a < b < c", "x & 1 == 0"):
    print(f"{text:12s} {to_sexpr(parse(text))}")

# subscripts and the multiple-output separator exist only in root
print(to_sexpr(parse("jet_pt[0] : jet_eta[] : n_jet")))

# numexpr trees use plain function names
print(to_sexpr(from_numexpr("where(x > 0, sqrt(x), 0)")))

# s-expressions read back to equal trees
text = to_sexpr(tree)
assert from_sexpr(text) == tree
print(from_sexpr("(+ (lit 1) (* (sym x) (lit 2.5)))").to_root())
