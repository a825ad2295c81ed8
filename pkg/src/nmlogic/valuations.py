"""Valuations on finite distributive lattices.

A valuation is a map ``v`` with ``v(x) + v(y) = v(x|y) + v(x&y)`` for all
pairs.  On a finite distributive lattice it is determined by its value at
bottom together with its values on the join-irreducible elements, and it
can be realised additively: give each join-irreducible ``g`` a weight
``w(g)`` so that

    v(x) = base + sum of w(g) over join-irreducibles g <= x.

Since a join-irreducible lies below ``x | y`` iff it lies below ``x`` or
below ``y``, this sum is automatically a valuation, and solving for the
weights along any linear extension of the join-irreducible order
reproduces the prescribed values.

Two concrete valuations matter here: the classical one assigning 1 to
every join-irreducible, and the variant assigning 1 only to the idempotent
join-irreducibles.  The latter, on a free algebra, counts the satisfying
assignments of a formula; see :mod:`nmlogic.models` for the independent
counting route.

Any object with ``element_ids()``, ``leq(x, y)``, ``bottom_id`` and
``join_irreducible_ids`` can be valued; the idempotent variant also needs
``is_idempotent``.  :class:`nmlogic.free_algebra.FreeAlgebra` provides all
of them.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping

from .formula import Formula


@dataclass(frozen=True)
class ValuationSpec:
    """Prescribed value at bottom plus one value per join-irreducible id."""

    base: Fraction
    ji_values: Mapping[int, Fraction]

    @classmethod
    def of(cls, base, ji_values: Mapping[int, object]) -> "ValuationSpec":
        return cls(Fraction(base), {g: Fraction(v) for g, v in ji_values.items()})


@dataclass(frozen=True)
class WeightTable:
    """Solved weights, one per join-irreducible id."""

    base: Fraction
    by_id: Mapping[int, Fraction]

    def __getitem__(self, g: int) -> Fraction:
        return self.by_id[g]


def weights(lattice, spec: ValuationSpec) -> WeightTable:
    """Solve for the additive weights realising ``spec``.

    Join-irreducibles are processed in a linear extension of their order;
    each weight is what remains of the prescribed value after the base and
    all strictly smaller weights are accounted for.
    """
    jis = list(lattice.join_irreducible_ids)
    missing = [g for g in jis if g not in spec.ji_values]
    if missing:
        raise ValueError(f"spec is missing join-irreducibles {missing}")
    stray = [g for g in spec.ji_values if g not in jis]
    if stray:
        raise ValueError(f"spec values {stray} are not join-irreducibles")
    below = {g: [p for p in jis if p != g and lattice.leq(p, g)] for g in jis}
    table: dict[int, Fraction] = {}
    for g in sorted(jis, key=lambda g: len(below[g])):
        table[g] = spec.ji_values[g] - spec.base - sum(
            (table[p] for p in below[g]), Fraction(0)
        )
    return WeightTable(spec.base, table)


def evaluate(lattice, spec: ValuationSpec, x: int, table: WeightTable | None = None) -> Fraction:
    """Value of element ``x`` under the valuation prescribed by ``spec``.

    Pass a precomputed ``table`` when valuing many elements.
    """
    if table is None:
        table = weights(lattice, spec)
    total = table.base
    for g in lattice.join_irreducible_ids:
        if lattice.leq(g, x):
            total += table.by_id[g]
    return total


def euler_spec(lattice) -> ValuationSpec:
    """Value 1 on every join-irreducible, 0 at bottom."""
    return ValuationSpec.of(0, {g: 1 for g in lattice.join_irreducible_ids})


def idempotent_euler_spec(lattice) -> ValuationSpec:
    """Value 1 on idempotent join-irreducibles only, 0 elsewhere and at bottom."""
    return ValuationSpec.of(
        0,
        {g: int(lattice.is_idempotent(g)) for g in lattice.join_irreducible_ids},
    )


def _as_int(value: Fraction) -> int:
    assert value.denominator == 1
    return int(value)


def euler_char(lattice, x: int, table: WeightTable | None = None) -> int:
    """The classical characteristic of ``x``; always an integer."""
    return _as_int(evaluate(lattice, euler_spec(lattice), x, table))


def idempotent_euler_char(lattice, x: int, table: WeightTable | None = None) -> int:
    """The idempotent variant of the characteristic; always an integer."""
    return _as_int(evaluate(lattice, idempotent_euler_spec(lattice), x, table))


def chi_plus_by_counting(algebra, x: int) -> int:
    """Count the minimal idempotent join-irreducibles below ``x``.

    Independent route to the idempotent characteristic: no weights are
    solved, the minimal idempotent join-irreducibles are simply counted.
    The two routes agree on every element of a free algebra.
    """
    return sum(1 for g in algebra.minimal_idempotent_ji_ids if algebra.leq(g, x))


def valuation_of_formula(
    algebra, spec: ValuationSpec, f: Formula, table: WeightTable | None = None
) -> Fraction:
    """Value of the equivalence class of ``f`` under ``spec``."""
    return evaluate(algebra, spec, algebra.element_of(f), table)
