"""Filters, prime filters, their forest, and quotients by maximal filters.

A filter is a nonempty upper set closed under fusion; in a finite algebra
it is principal, generated by its minimum element.  A filter is prime when
it is proper and contains a disjunct of every disjunction it contains.
The prime filters are exactly the upper sets of the idempotent
join-irreducible elements, so they are enumerated from those generators
rather than from the power set.

Ordered by reverse inclusion the prime filters form a forest whose roots
are the inclusion-maximal filters, generated by the minimal idempotent
join-irreducibles.  Quotienting by a root collapses the algebra to a chain
with two or three elements; three happens exactly when the relevant
subdirect factor has a negation fixpoint.
"""

from __future__ import annotations

from dataclasses import dataclass

from .chain import NMChain
from .free_algebra import FreeAlgebra


@dataclass(frozen=True)
class Filter:
    """An upper set closed under fusion, with its minimum element."""

    elements: frozenset[int]
    generator: int


@dataclass(frozen=True)
class PrimeFilterForest:
    """Prime filters ordered by reverse inclusion.

    ``parent[i]`` is the index of the immediate ancestor of ``filters[i]``
    (the next filter towards the root, i.e. the next larger filter), or
    None for roots.
    """

    filters: tuple[Filter, ...]
    parent: tuple[int | None, ...]

    @property
    def roots(self) -> tuple[int, ...]:
        return tuple(i for i, p in enumerate(self.parent) if p is None)

    def ancestors(self, i: int) -> list[int]:
        chain = []
        p = self.parent[i]
        while p is not None:
            chain.append(p)
            p = self.parent[p]
        return chain


@dataclass(frozen=True)
class QuotientChain:
    """Congruence classes of a quotient, listed bottom class first."""

    classes: tuple[frozenset[int], ...]

    @property
    def size(self) -> int:
        return len(self.classes)


def principal_upset(algebra: FreeAlgebra, g: int) -> frozenset[int]:
    return frozenset(x for x in algebra.element_ids() if algebra.leq(g, x))


def is_filter(algebra: FreeAlgebra, elements: frozenset[int]) -> bool:
    """Definitional check: nonempty upper set closed under fusion."""
    if not elements:
        return False
    for x in elements:
        for y in algebra.element_ids():
            if algebra.leq(x, y) and y not in elements:
                return False
        for y in elements:
            if algebra.tnorm(x, y) not in elements:
                return False
    return True


def is_prime_filter(algebra: FreeAlgebra, elements: frozenset[int]) -> bool:
    """Definitional check: a proper filter containing a disjunct of every join."""
    if len(elements) == algebra.size or not is_filter(algebra, elements):
        return False
    for x in algebra.element_ids():
        for y in algebra.element_ids():
            if algebra.join(x, y) in elements:
                if x not in elements and y not in elements:
                    return False
    return True


def prime_filters(algebra: FreeAlgebra) -> list[Filter]:
    """All prime filters, each as the upper set of an idempotent join-irreducible."""
    result = []
    for g in algebra.join_irreducible_ids:
        if algebra.is_idempotent(g):
            result.append(Filter(principal_upset(algebra, g), g))
    return result


def forest(algebra: FreeAlgebra) -> PrimeFilterForest:
    """The prime filters under reverse inclusion, with parent links.

    Reverse inclusion of the upper sets is the element order of the
    generators, so the forest is computed on generators.  The ancestor
    set of every node is checked to be a chain.
    """
    filters = tuple(sorted(prime_filters(algebra), key=lambda f: f.generator))
    gens = [f.generator for f in filters]
    parent: list[int | None] = []
    for i, g in enumerate(gens):
        strictly_below = [j for j, h in enumerate(gens) if h != g and algebra.leq(h, g)]
        for a in strictly_below:
            for b in strictly_below:
                if not (algebra.leq(gens[a], gens[b]) or algebra.leq(gens[b], gens[a])):
                    raise RuntimeError("prime filter order is not a forest")
        if strictly_below:
            parent.append(max(strictly_below, key=lambda j: algebra.heights[gens[j]]))
        else:
            parent.append(None)
    return PrimeFilterForest(filters, tuple(parent))


def quotient_by_maximal(algebra: FreeAlgebra, filt: Filter) -> QuotientChain:
    """Collapse the algebra by the congruence of a maximal prime filter.

    Two elements are identified when their bi-implication lies in the
    filter.  The classes always form a nilpotent-minimum chain with two or
    three elements; anything else signals a broken input and raises.
    Passing a non-maximal filter raises ``ValueError``.
    """
    if principal_upset(algebra, filt.generator) != filt.elements:
        raise ValueError("filter elements do not match the generator's upper set")
    if filt.generator not in algebra.minimal_idempotent_ji_ids:
        raise ValueError("filter is not maximal")

    member = filt.elements

    def same(x: int, y: int) -> bool:
        return algebra.iff(x, y) in member

    reps: list[int] = []
    class_of = [0] * algebra.size
    for x in algebra.element_ids():
        for c, r in enumerate(reps):
            if same(x, r):
                class_of[x] = c
                break
        else:
            class_of[x] = len(reps)
            reps.append(x)

    m = len(reps)
    if m not in (2, 3):
        raise RuntimeError(f"quotient by a maximal filter has {m} classes")

    # Class order: [x] <= [y] iff x -> y lands in the filter.
    def cls_leq(c: int, d: int) -> bool:
        return algebra.residuum(reps[c], reps[d]) in member

    order = sorted(range(m), key=lambda c: sum(cls_leq(c, d) for d in range(m)), reverse=True)
    rank = {c: i for i, c in enumerate(order)}
    for c in range(m):
        for d in range(m):
            if cls_leq(c, d) != (rank[c] <= rank[d]):
                raise RuntimeError("quotient classes are not totally ordered")

    # The congruence must respect all four operations, and the induced
    # operations must be the chain operations on {0..m-1}.
    chain = NMChain(m)
    ops = {
        "meet": (algebra.meet, chain.meet),
        "join": (algebra.join, chain.join),
        "tnorm": (algebra.tnorm, chain.tnorm),
        "imp": (algebra.residuum, chain.residuum),
    }
    for alg_op, chain_op in ops.values():
        for x in algebra.element_ids():
            for y in algebra.element_ids():
                got = rank[class_of[alg_op(x, y)]]
                want = chain_op(chain.value(rank[class_of[x]]), chain.value(rank[class_of[y]]))
                if got != want.index:
                    raise RuntimeError("quotient operations are not well defined")

    classes = [frozenset(x for x in algebra.element_ids() if rank[class_of[x]] == i)
               for i in range(m)]
    return QuotientChain(tuple(classes))
