"""
Prime filters, their forest, and chain quotients
================================================
"""

from nmlogic import Variant, build, forest, prime_filters, quotient_by_maximal

one = build(1, Variant.NM)

# Prime filters are exactly the upper sets of idempotent join-irreducibles.
for filt in prime_filters(one):
    print(f"generator {filt.generator:2}  filter size {len(filt.elements)}")

# Under reverse inclusion they form a forest; the roots are the largest
# filters, generated by the minimal idempotent join-irreducibles.
fst = forest(one)
print("roots:", [fst.filters[i].generator for i in fst.roots])
for i, parent in enumerate(fst.parent):
    if parent is not None:
        print(f"filter of {fst.filters[i].generator} sits under"
              f" filter of {fst.filters[parent].generator}")

# Quotienting by a root collapses everything to a tiny chain: two classes,
# or three when the supporting subdirect factor has a fixpoint.
for i in fst.roots:
    quotient = quotient_by_maximal(one, fst.filters[i])
    print(f"root {fst.filters[i].generator:2} -> chain with {quotient.size} classes,"
          f" sizes {[len(c) for c in quotient.classes]}")

# The fixpoint-free variant only ever produces two-class quotients.
flat = build(1, Variant.NM_MINUS)
fst = forest(flat)
print("fixpoint-free quotients:",
      [quotient_by_maximal(flat, fst.filters[i]).size for i in fst.roots])
