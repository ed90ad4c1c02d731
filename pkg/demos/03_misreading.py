"""
Misreading as a crystal tensor operator
=======================================

A substitution is allowed when the single state reached by its operator has
the labels of the substituted codon.
"""

from gcwe.misread import MisreadSpec, allowed, allowed_double, specs_at

# every third-position transition goes through
third = [allowed(c, s) for c in ("CCC", "GAG", "UUC") for s in specs_at(3)
         if s.source == c[2] and s.kind.value == "transition"]
for r in third:
    print(r.codon, "->", r.target, r.operator, "allowed" if r else "blocked")

# third-position transversions depend on the first two letters
for codon in ("CCC", "CAC"):
    for target in "GA":
        r = allowed(codon, MisreadSpec(3, "C", target))
        print(codon, "->", r.target, r.operator, r.predicted, "vs", r.expected, bool(r))

# two letters at once: first through a virtual state, then onward
r = allowed_double("UCC", MisreadSpec(1, "U", "A"), MisreadSpec(2, "C", "G"))
print(r.codon, "=>", f"({r.virtual_codon})", "=>", r.target, "virtual", r.virtual, "allowed:", r.allowed)

# the C-to-U pair on the first two letters reaches UUN only for N = U
for n in "CUGA":
    r = allowed_double("CC" + n, MisreadSpec(1, "C", "U"), MisreadSpec(2, "C", "U"))
    print(r.codon, "=>", r.target, r.predicted, "target", r.expected, r.allowed)
