"""
Parsing, printing and logical consequence
=========================================
"""

from nmlogic import (
    Variant, desugar, format_formula, is_tautology, parse, proves, variables,
)

# Round trip: the printer emits the fewest parentheses that reparse equally.
f = parse("(x1 -> x2) -> x2 | ~x1")
print("parsed :", f)
print("printed:", format_formula(f))
print("vars   :", variables(f))

# Sugar (|, ~, 1, <->, ^2) desugars into the core connectives &, * and ->.
print("desugared negation:", format_formula(desugar(parse("~x1"))))
print("desugared join    :", format_formula(desugar(parse("x1 | x2"))))

# Tautology checking needs no algebra construction: a formula is valid
# exactly when it is identically top over the generic evaluation grid.
print("prelinearity is valid:",
      is_tautology(2, Variant.NM, parse("(x1 -> x2) | (x2 -> x1)")))
print("excluded middle is valid:",
      is_tautology(1, Variant.NM, parse("x1 | ~x1")))

# The axiom separating the two variants: valid without a fixpoint only.
axiom = parse("~(~x1^2)^2 <-> (~(~x1)^2)^2")
print("separating axiom, fixpoint-free variant:",
      is_tautology(1, Variant.NM_MINUS, axiom))
print("separating axiom, full variant:", is_tautology(1, Variant.NM, axiom))

# Consequence is local deduction: the premise enters squared.
print("a contradiction proves falsum:",
      proves(1, Variant.NM, parse("x1 & ~x1"), parse("0")))
print("verum proves excluded middle:",
      proves(1, Variant.NM, parse("1"), parse("x1 | ~x1")))
