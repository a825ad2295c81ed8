import pytest

from nmlogic import (
    Filter,
    forest,
    is_filter,
    is_prime_filter,
    prime_filters,
    quotient_by_maximal,
)
from nmlogic.filters import principal_upset


def coordinates(nmm1):
    return {x: nmm1.vector(x)[1:3] for x in nmm1.element_ids()}


@pytest.mark.parametrize("fixture", ["nm1", "nmm1", "nm0", "nmm0"])
def test_generator_enumeration_matches_definitional_scan(fixture, request):
    algebra = request.getfixturevalue(fixture)
    # Every filter of a finite algebra is a principal upper set, so scanning
    # all of those with the definitional predicate is exhaustive.
    definitional = sorted(
        x
        for x in algebra.element_ids()
        if is_prime_filter(algebra, principal_upset(algebra, x))
    )
    assert sorted(f.generator for f in prime_filters(algebra)) == definitional


@pytest.mark.parametrize("fixture", ["nm1", "nmm1", "nm0"])
def test_prime_filters_are_principal_fusion_closed_upper_sets(fixture, request):
    algebra = request.getfixturevalue(fixture)
    for filt in prime_filters(algebra):
        assert is_filter(algebra, filt.elements)
        assert is_prime_filter(algebra, filt.elements)
        assert min(filt.elements, key=lambda x: algebra.heights[x]) == filt.generator
        assert principal_upset(algebra, filt.generator) == filt.elements
        assert filt.generator in algebra.join_irreducible_ids
        assert algebra.is_idempotent(filt.generator)


def test_prime_filter_counts(nm1, nmm1, nm0):
    assert len(prime_filters(nm0)) == 1
    assert prime_filters(nm0)[0].elements == frozenset({nm0.top_id})
    assert len(prime_filters(nmm1)) == 4
    idem_ji = [g for g in nm1.join_irreducible_ids if nm1.is_idempotent(g)]
    assert sorted(f.generator for f in prime_filters(nm1)) == sorted(idem_ji)


def test_fixpoint_free_generators_in_grid_coordinates(nmm1):
    coords = coordinates(nmm1)
    gens = sorted(coords[f.generator] for f in prime_filters(nmm1))
    assert gens == [(0, 2), (0, 3), (2, 0), (3, 0)]


@pytest.mark.parametrize("fixture", ["nm1", "nmm1", "nm0", "nmm0"])
def test_forest_ancestors_are_chains(fixture, request):
    algebra = request.getfixturevalue(fixture)
    fst = forest(algebra)
    for i in range(len(fst.filters)):
        ancestors = fst.ancestors(i)
        gens = [fst.filters[j].generator for j in ancestors]
        for a in gens:
            for b in gens:
                assert algebra.leq(a, b) or algebra.leq(b, a)
        # Walking towards the root, the filters grow.
        sizes = [len(fst.filters[j].elements) for j in [i] + ancestors]
        assert sizes == sorted(sizes)


def test_forest_roots(nm1, nmm1, nm0, nmm0):
    assert len(forest(nm1).roots) == 3
    assert len(forest(nmm1).roots) == 2
    assert len(forest(nm0).roots) == 1
    assert len(forest(nmm0).roots) == 1
    for algebra in (nm1, nmm1, nm0, nmm0):
        fst = forest(algebra)
        root_gens = sorted(fst.filters[i].generator for i in fst.roots)
        assert root_gens == sorted(algebra.minimal_idempotent_ji_ids)


def test_fixpoint_free_forest_is_two_short_chains(nmm1):
    fst = forest(nmm1)
    assert len(fst.filters) == 4
    children = [i for i, p in enumerate(fst.parent) if p is not None]
    assert len(children) == 2
    for i in children:
        parent = fst.parent[i]
        assert fst.parent[parent] is None
        assert fst.filters[i].elements < fst.filters[parent].elements


def test_quotients_by_roots(nm1, nmm1, nm0):
    sizes = []
    fst = forest(nm1)
    for i in fst.roots:
        sizes.append(quotient_by_maximal(nm1, fst.filters[i]).size)
    assert sorted(sizes) == [2, 2, 3]

    fst = forest(nmm1)
    for i in fst.roots:
        assert quotient_by_maximal(nmm1, fst.filters[i]).size == 2

    fst = forest(nm0)
    (root,) = fst.roots
    quotient = quotient_by_maximal(nm0, fst.filters[root])
    assert quotient.size == 2
    assert quotient.classes == (frozenset({nm0.bottom_id}), frozenset({nm0.top_id}))


def test_quotient_classes_partition_and_order(nm1):
    fst = forest(nm1)
    for i in fst.roots:
        quotient = quotient_by_maximal(nm1, fst.filters[i])
        everything = [x for cls in quotient.classes for x in cls]
        assert sorted(everything) == list(nm1.element_ids())
        assert nm1.bottom_id in quotient.classes[0]
        assert nm1.top_id in quotient.classes[-1]


def test_quotient_rejects_non_maximal(nmm1):
    non_roots = [
        f for f in prime_filters(nmm1)
        if f.generator not in nmm1.minimal_idempotent_ji_ids
    ]
    with pytest.raises(ValueError):
        quotient_by_maximal(nmm1, non_roots[0])


def test_quotient_rejects_inconsistent_filter(nmm1):
    g = nmm1.minimal_idempotent_ji_ids[0]
    bogus = Filter(frozenset({nmm1.top_id}), g)
    with pytest.raises(ValueError):
        quotient_by_maximal(nmm1, bogus)
