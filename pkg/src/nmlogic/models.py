"""Brute-force assignment semantics: enumerate and count satisfying assignments.

Assignments draw values from one of two carriers: the three-element chain
{0, 1/2, 1} or the two-element chain {0, 1}.  Evaluation reuses the chain
module directly, so this route is independent of the free-algebra and
valuation machinery it is used to cross-check.
"""

from __future__ import annotations

import itertools
from enum import Enum

from .chain import ChainValue, NMChain, eval_chain
from .formula import Formula, variables


class AssignmentSpace(Enum):
    """Value carrier for assignments: THREE = {0, 1/2, 1}, TWO = {0, 1}."""

    THREE = 3
    TWO = 2

    @property
    def chain(self) -> NMChain:
        return NMChain(self.value)


def _check_range(f: Formula, n: int) -> None:
    if n < 0:
        raise ValueError(f"variable count must be >= 0, got {n}")
    out = sorted(v for v in variables(f) if v > n)
    if out:
        raise ValueError(f"variable x{out[0]} out of range for n={n}")


def enumerate_models(
    f: Formula, n: int, space: AssignmentSpace
) -> list[dict[int, ChainValue]]:
    """Satisfying assignments over ``x1..xn``, in lexicographic order."""
    _check_range(f, n)
    chain = space.chain
    found = []
    for point in itertools.product(range(chain.size), repeat=n):
        env = {i + 1: ChainValue(point[i], chain.size) for i in range(n)}
        if eval_chain(f, chain, env) == chain.top:
            found.append(env)
    return found


def count_models(f: Formula, n: int, space: AssignmentSpace) -> int:
    """Number of assignments over ``x1..xn`` that evaluate ``f`` to 1."""
    _check_range(f, n)
    chain = space.chain
    count = 0
    for point in itertools.product(range(chain.size), repeat=n):
        env = {i + 1: ChainValue(point[i], chain.size) for i in range(n)}
        if eval_chain(f, chain, env) == chain.top:
            count += 1
    return count
