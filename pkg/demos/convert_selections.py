"""
Converting event selections between dialects
============================================

A few typical selection and weight strings, written the way they appear
in a TTree::Draw call, translated for numexpr and for numpy code.
"""

from treexpr import EmitError, convert

selections = [
    "TMath::Sqrt(px*px + py*py)",
    "pt > 30 && TMath::Abs(eta) < 2.4",
    "!(n_mu > 0) || weight < 0",
    "TMath::ATan2(py, px) * 180 / 3.14159",
    "1 << nbits",
]

for text in selections:
    print(text)
    for target in ("numexpr", "python"):
        try:
            print(f"  {target:8s} {convert(text, 'root', target)}")
        except EmitError as exc:
            print(f"  {target:8s} <{exc.reason}>")

# the output is fully parenthesized, so it reads back the same everywhere
print(convert("a - b - c", "root", "root"))
print(convert("a - (b - c)", "root", "root"))

# some root constructs have no numexpr spelling at all
for text in ("px : py", "TMath::Power(x, 2)", "jet_pt[0] % 2"):
    try:
        convert(text, "root", "numexpr")
    except EmitError as exc:
        print(f"{text!r}: {exc}")
