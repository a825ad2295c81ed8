"""
Finite chains and exact evaluation
==================================

Every computation runs on integer indices or exact rationals; there is no
floating point anywhere, so printed values are always exact.
"""

from fractions import Fraction

from nmlogic import NMChain, eval_chain, eval_standard, parse

# The five-element chain stands for {0, 1/4, 1/2, 3/4, 1}.
chain = NMChain(5)
print("elements:", [str(v.as_fraction) for v in chain.values()])
print("fixpoint:", chain.fixpoint.as_fraction)

# Fusion truncates below the diagonal: x (*) y is min(x, y) only when the
# arguments jointly exceed 1, otherwise it collapses to 0.
half, quarter = chain.value(2), chain.value(1)
print("1/2 (*) 1/2 =", chain.tnorm(half, half).as_fraction)
print("3/4 (*) 3/4 =", chain.tnorm(chain.value(3), chain.value(3)).as_fraction)

# The implication is the adjoint of fusion: x (*) z <= y  iff  z <= x -> y.
print("3/4 -> 1/4 =", chain.residuum(chain.value(3), quarter).as_fraction)

# An even chain has no fixpoint; negation pairs everything off.
even = NMChain(4)
print("negations on the 4-chain:",
      [(x.as_fraction, even.neg(x).as_fraction) for x in even.values()])

# Formulas evaluate on any chain or on [0,1] itself.
f = parse("(x1 <-> ~x1)^2 & x1")
print("formula at 1/2 on the 3-chain:",
      eval_chain(f, NMChain(3), {1: NMChain(3).value(1)}).as_fraction)
print("formula at 3/4 on [0,1]:", eval_standard(f, {1: Fraction(3, 4)}))
print("formula at 9/10 on [0,1]:", eval_standard(f, {1: Fraction(9, 10)}))
