import itertools

import numpy as np
import pytest

from nmlogic import (
    ElementCapExceeded,
    FreeAlgebra,
    Variant,
    build,
    generic_chain_size,
    parse,
    truth_vector,
)
from nmlogic.formula import TOP, And, Implies, Not, Or, Var


def reference_closure(n, k):
    """Plain reimplementation of the documented build order.

    Rounds rescan every ordered pair of the elements known at the round
    start; pairs run in lexicographic id order and each pair tries meet,
    join, fusion, implication.  No incremental skipping, no numpy.
    """
    top = k - 1
    grid = list(itertools.product(range(k), repeat=n))

    def tn(x, y):
        return min(x, y) if x + y > top else 0

    def im(x, y):
        return top if x <= y else max(top - x, y)

    vecs = []
    seen = {}

    def commit(v):
        if v not in seen:
            seen[v] = len(vecs)
            vecs.append(v)

    commit(tuple([0] * len(grid)))
    commit(tuple([top] * len(grid)))
    for i in range(n):
        commit(tuple(g[i] for g in grid))
    while True:
        current = len(vecs)
        for i in range(current):
            for j in range(current):
                a, b = vecs[i], vecs[j]
                commit(tuple(map(min, a, b)))
                commit(tuple(map(max, a, b)))
                commit(tuple(map(tn, a, b)))
                commit(tuple(map(im, a, b)))
        if len(vecs) == current:
            return vecs


def test_generic_chain_size():
    assert generic_chain_size(1, Variant.NM) == 5
    assert generic_chain_size(1, Variant.NM_MINUS) == 4
    assert generic_chain_size(2, Variant.NM) == 7
    assert generic_chain_size(0, Variant.NM_MINUS) == 2
    with pytest.raises(ValueError):
        generic_chain_size(-1, Variant.NM)


def test_cardinalities(nm1, nmm1, nm0, nmm0):
    assert nm1.size == 48
    assert nmm1.size == 16
    assert nm0.size == 2
    assert nmm0.size == 2


@pytest.mark.parametrize(
    "n,variant",
    [(0, Variant.NM), (0, Variant.NM_MINUS), (1, Variant.NM), (1, Variant.NM_MINUS)],
)
def test_build_matches_reference_closure(n, variant):
    algebra = build(n, variant)
    expected = reference_closure(n, generic_chain_size(n, variant))
    assert [algebra.vector(x) for x in algebra.element_ids()] == expected


def test_build_is_deterministic():
    first = build(1, Variant.NM)
    second = build(1, Variant.NM)
    assert np.array_equal(first.vectors, second.vectors)
    assert first.provenance == second.provenance
    assert first.covers() == second.covers()


def test_seed_ids(nm1, nm0):
    assert nm1.bottom_id == 0 and nm1.top_id == 1
    assert nm1.vector(2) == (0, 1, 2, 3, 4)  # the projection comes right after top
    assert nm1.provenance[:3] == (("bot",), ("top",), ("var", 1))
    assert nm0.provenance == (("bot",), ("top",))


def test_closure_soundness(nm1, nmm1, nm0):
    nm1.check_closed()
    nmm1.check_closed()
    nm0.check_closed()


def _op_tables(algebra):
    n = algebra.size
    meet = np.zeros((n, n), dtype=np.int64)
    join = np.zeros((n, n), dtype=np.int64)
    for x in algebra.element_ids():
        for y in algebra.element_ids():
            meet[x, y] = algebra.meet(x, y)
            join[x, y] = algebra.join(x, y)
    return meet, join


@pytest.mark.parametrize("fixture", ["nm1", "nmm1", "nm0", "nmm0"])
def test_lattice_reduct_is_distributive(fixture, request):
    algebra = request.getfixturevalue(fixture)
    meet, join = _op_tables(algebra)
    n = algebra.size
    xs = np.arange(n)
    # x & (y | z) == (x & y) | (x & z) over the whole cube.
    lhs = meet[xs[:, None, None], join[None, :, :]]
    rhs = join[meet[xs][:, :, None], meet[xs][:, None, :]]
    assert np.array_equal(lhs, rhs)


@pytest.mark.parametrize("fixture", ["nm1", "nmm1", "nm0", "nmm0"])
def test_join_irreducibles_match_definitional_test(fixture, request):
    algebra = request.getfixturevalue(fixture)
    _, join = _op_tables(algebra)
    definitional = []
    for x in algebra.element_ids():
        if x == algebra.bottom_id:
            continue
        pairs = np.argwhere(join == x)
        if all(x in (int(y), int(z)) for y, z in pairs):
            definitional.append(x)
    assert definitional == list(algebra.join_irreducible_ids)


def test_bottom_and_top_are_idempotent(nm1):
    assert nm1.bottom_id in nm1.idempotent_ids
    assert nm1.top_id in nm1.idempotent_ids


def test_idempotent_flags_cover_every_element(nm1):
    flags = nm1.idempotent_flags
    assert len(flags) == nm1.size
    for x in nm1.element_ids():
        assert flags[x] == nm1.is_idempotent(x) == (nm1.tnorm(x, x) == x)


def test_negation_and_biimplication_on_elements(nm1):
    for x in nm1.element_ids():
        assert nm1.neg(nm1.neg(x)) == x
        assert nm1.neg(x) == nm1.residuum(x, nm1.bottom_id)
        assert nm1.iff(x, x) == nm1.top_id
    a, b = 2, nm1.neg(2)
    assert nm1.neg(nm1.join(a, b)) == nm1.meet(nm1.neg(a), nm1.neg(b))


@pytest.mark.parametrize("fixture", ["nm1", "nmm1"])
def test_non_idempotent_join_irreducibles_square_to_bottom(fixture, request):
    algebra = request.getfixturevalue(fixture)
    for g in algebra.join_irreducible_ids:
        if not algebra.is_idempotent(g):
            assert algebra.tnorm(g, g) == algebra.bottom_id


ALPHA = parse("(x1 <-> ~x1)^2 & x1")


def test_element_of_examples(nm1):
    assert nm1.element_of(TOP) == nm1.top_id
    a = nm1.element_of(ALPHA)
    assert a in nm1.join_irreducible_ids
    assert not nm1.is_idempotent(a)
    lhs = nm1.element_of(Or(Var(1), Not(Var(1))))
    rhs = nm1.element_of(Not(And(Var(1), Not(Var(1)))))
    assert lhs == rhs


def test_element_of_rejects_out_of_range_variable(nm1):
    with pytest.raises(ValueError):
        nm1.element_of(Var(2))


def test_minimal_idempotent_jis(nm1, nmm1, nm0):
    assert len(nm1.minimal_idempotent_ji_ids) == 3
    assert len(nmm1.minimal_idempotent_ji_ids) == 2
    assert nm0.minimal_idempotent_ji_ids == (nm0.top_id,)


def test_product_of_two_four_chains(nmm1):
    # The two coordinates where the generator takes its interior values
    # give an order isomorphism onto the full 4x4 grid.
    generator = nmm1.element_of(Var(1))
    assert nmm1.vector(generator) == (0, 1, 2, 3)
    coords = {x: nmm1.vector(x)[1:3] for x in nmm1.element_ids()}
    assert sorted(coords.values()) == sorted(itertools.product(range(4), repeat=2))
    for x in nmm1.element_ids():
        for y in nmm1.element_ids():
            componentwise = all(a <= b for a, b in zip(coords[x], coords[y]))
            assert nmm1.leq(x, y) == componentwise
    # Heights then read off the grid as coordinate sums.
    for x in nmm1.element_ids():
        assert nmm1.heights[x] == sum(coords[x])


@pytest.mark.parametrize("fixture", ["nm1", "nmm1", "nm0"])
def test_representative_formulas_define_their_elements(fixture, request):
    algebra = request.getfixturevalue(fixture)
    for x in algebra.element_ids():
        assert algebra.element_of(algebra.representative_formula(x)) == x


def test_tautology_examples(nm1):
    assert nm1.is_tautology(parse("(x1 -> x1) | (x1 -> x1)"))
    assert not nm1.is_tautology(ALPHA)
    assert nm1.is_tautology(parse("~~x1 -> x1"))
    assert not nm1.is_tautology(parse("x1 | ~x1"))


def test_tautology_without_building():
    from nmlogic import is_tautology

    assert is_tautology(2, Variant.NM, parse("(x1 -> x2) | (x2 -> x1)"))
    assert not is_tautology(1, Variant.NM, parse("x1 | ~x1"))
    assert is_tautology(1, Variant.NM_MINUS, parse("~(~x1^2)^2 <-> (~(~x1)^2)^2"))
    assert not is_tautology(1, Variant.NM, parse("~(~x1^2)^2 <-> (~(~x1)^2)^2"))


def test_proves_examples(nm1):
    from nmlogic import proves

    assert nm1.proves(Var(1), Var(1))
    assert nm1.proves(parse("x1 & ~x1"), parse("0"))
    assert not nm1.proves(TOP, ALPHA)
    assert proves(1, Variant.NM, parse("x1 & ~x1"), parse("0"))


def test_truth_vector_examples():
    assert truth_vector(1, Variant.NM, ALPHA) == (0, 0, 2, 0, 0)
    assert truth_vector(0, Variant.NM, TOP) == (2,)
    with pytest.raises(ValueError):
        truth_vector(1, Variant.NM, Var(2))


def test_element_cap():
    with pytest.raises(ElementCapExceeded) as err:
        build(1, Variant.NM, element_cap=10)
    assert err.value.cap == 10
    assert err.value.attained == 11
    assert "10" in str(err.value) and "11" in str(err.value)
    with pytest.raises(ValueError):
        build(1, Variant.NM, element_cap=0)


def test_export_import_round_trip(nmm1):
    data = nmm1.export()
    clone = FreeAlgebra.from_export(data)
    assert np.array_equal(clone.vectors, nmm1.vectors)
    assert clone.covers() == nmm1.covers()
    assert clone.join_irreducible_ids == nmm1.join_irreducible_ids
    assert clone.idempotent_ids == nmm1.idempotent_ids
    clone.check_closed()
    with pytest.raises(ValueError):
        clone.representative_formula(0)


def test_import_rejects_tampered_annotations(nmm1):
    data = nmm1.export()
    data["join_irreducible"] = data["join_irreducible"][:-1]
    with pytest.raises(ValueError):
        FreeAlgebra.from_export(data)


def test_vector_access(nm1):
    assert nm1.vector(nm1.bottom_id) == (0, 0, 0, 0, 0)
    assert nm1.vector(nm1.top_id) == (4, 4, 4, 4, 4)
    assert nm1.id_of_vector((0, 1, 2, 3, 4)) == 2
    with pytest.raises(KeyError):
        nm1.id_of_vector((4, 0, 0, 0, 0))
