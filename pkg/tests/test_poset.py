'''Poset behavior: closures, topology readings, structure predicates.'''

import pickle
from itertools import permutations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import bruteforce as bf
from finspec import _bits_py as pure
from finspec.errors import InputError, PreconditionError
from finspec.fixtures import a2, antichain, chain_poset, c2, d4, l3, v3
from finspec.poset import MonotoneMap, Poset, are_isomorphic


def test_constructor_rejects_bad_input():
    with pytest.raises(InputError):
        Poset(-1)
    with pytest.raises(InputError):
        Poset('3')
    with pytest.raises(InputError):
        Poset(3, [(0,)])
    with pytest.raises(InputError):
        Poset(3, [(0, 'x')])
    with pytest.raises(InputError):
        Poset(3, [(0, 3)])
    with pytest.raises(InputError):
        Poset(2, [(0, 1), (1, 0)])


def test_constructor_closes_relation():
    p = Poset(3, [(0, 1), (1, 2)])
    assert p.leq(0, 2)
    assert not p.leq(2, 0)
    assert p.covers() == [(0, 1), (1, 2)]


def test_covers_of_diamond():
    assert sorted(d4().covers()) == [(0, 1), (0, 2), (1, 3), (2, 3)]


def test_closures_on_v3():
    p = v3()
    assert p.up_closure({0}) == {0, 2}
    assert p.down_closure({2}) == {0, 1, 2}
    assert p.up_closure(set()) == set()
    assert p.minimal_points() == {0, 1}
    assert p.maximal_points() == {2}


def test_dual_swaps_closures():
    p = v3()
    q = p.dual()
    assert q.down_closure({0}) == p.up_closure({0})
    assert q.minimal_points() == p.maximal_points()
    assert q.dual() == p


def test_open_closed_aliases():
    p = v3()
    assert p.is_open({0, 1})
    assert p.is_open(set())
    assert not p.is_open({2})
    assert p.is_closed({2})
    assert p.is_clopen(set()) and p.is_clopen({0, 1, 2})
    assert not p.is_clopen({0})


def test_interior_and_regularize():
    p = v3()
    assert p.interior({0, 2}) == {0}
    assert p.regularize({0}) == {0}
    # a dense down-set regularizes to the whole space
    assert p.regularize({0, 1}) == {0, 1, 2}
    with pytest.raises(PreconditionError):
        p.regularize({2})


def test_density():
    p = v3()
    assert p.is_dense({0, 1})
    assert not p.is_dense({0})
    assert p.is_dense({0, 1, 2})


def test_patch_topology_trivializes():
    # the generated patch family is literally the powerset; the package
    # predicates must agree with that fixpoint computation everywhere
    for n in range(5):
        for rows in pure.labeled_stream(n):
            p = Poset.from_up_rows(rows)
            family = bf.patch_family(rows)
            assert family == set(range(1 << n))
            for s in range(1 << n):
                assert p.is_patch_open_mask(s)
                assert p.is_patch_closed_mask(s)
                assert p.patch_closure_mask(s) == s


def test_constructible_algebra_trivializes():
    for n in range(5):
        for rows in pure.labeled_stream(n):
            p = Poset.from_up_rows(rows)
            assert bf.constructible_family(rows) == set(range(1 << n))
            assert all(p.is_constructible_mask(s) for s in range(1 << n))


def test_compactness_is_computed_from_patch_closure():
    for rows in pure.labeled_stream(4):
        p = Poset.from_up_rows(rows)
        for s in range(1 << 4):
            assert p.is_compact_mask(s) == p.is_patch_closed_mask(
                p.down_closure_mask(s))
            assert p.is_compact_mask(s)


def test_structure_predicates_on_fixtures():
    p = v3()
    assert p.is_root_system() and not p.is_forest()
    assert not p.is_confluent() and p.confluence_witness() == (2, 0, 1)
    assert not p.is_inv_normal() and p.is_normal()
    assert not p.is_stranded()

    q = l3()
    assert q.is_forest() and not q.is_root_system()
    assert q.is_confluent() and q.is_inv_normal() and not q.is_normal()

    r = d4()
    assert not r.is_root_system() and not r.is_forest()
    assert r.is_confluent() and r.is_inv_normal() and r.is_normal()

    assert antichain(3).is_stranded()
    assert chain_poset(4).is_stranded()
    two_chains = Poset(4, [(0, 1), (2, 3)])
    assert two_chains.is_stranded()
    assert not v3().structure_predicate('stranded')
    with pytest.raises(InputError):
        v3().structure_predicate('nonsense')


def test_forest_and_root_autoduality():
    for rows in pure.labeled_stream(4):
        p = Poset.from_up_rows(rows)
        assert p.is_root_system() == p.dual().is_forest()
        assert p.is_normal() == p.dual().is_inv_normal()


def test_stranded_means_both_forest_and_root_plus_confluent_parts():
    for rows in pure.labeled_stream(4):
        p = Poset.from_up_rows(rows)
        if p.is_stranded():
            assert p.is_forest() and p.is_root_system()


def test_min_point_maps():
    assert v3().min_point_map() is None
    assert l3().min_point_map() == (0, 0, 0)
    assert l3().max_point_map() is None
    assert v3().max_point_map() == (2, 2, 2)
    assert d4().min_point_map() == (0, 0, 0, 0)


def test_retractions():
    assert v3().retraction('to_min') is None
    r = l3().retraction('to_min')
    assert r is not None and r.assignment == (0, 0, 0)
    assert r.target_points == (0,)
    r = v3().retraction('to_max')
    assert r is not None and r.assignment == (0, 0, 0)
    with pytest.raises(InputError):
        v3().retraction('sideways')


def test_induced_subposet():
    p = v3()
    sub, carrier = p.induced({0, 2})
    assert carrier == (0, 2)
    assert sub == chain_poset(2)
    sub, carrier = p.induced({0, 1})
    assert sub == antichain(2)


def test_monotone_map_checks():
    p, q = v3(), a2()
    with pytest.raises(InputError):
        MonotoneMap(p, q, (0, 1))
    with pytest.raises(InputError):
        MonotoneMap(p, q, (0, 1, 5))
    bad = MonotoneMap(p, q, (0, 1, 0))
    assert not bad.is_monotone()
    collapse = MonotoneMap(p, q, (0, 0, 0))
    assert collapse.is_monotone() and collapse.is_continuous()
    ident = MonotoneMap(p, p, (0, 1, 2))
    assert ident.is_monotone() and ident.is_continuous()


def test_canonical_agrees_with_permutation_search():
    reps = []
    for rows in pure.labeled_stream(3):
        p = Poset.from_up_rows(rows)
        for q in reps:
            assert are_isomorphic(p, q) == bf.isomorphic_by_search(p.up, q.up)
        reps.append(p)


def test_canonical_is_idempotent():
    for rows in pure.labeled_stream(4):
        p = Poset.from_up_rows(rows)
        c = p.canonical()
        assert c.canonical() == c
        assert are_isomorphic(p, c)


def test_pickle_round_trip():
    p = d4()
    q = pickle.loads(pickle.dumps(p))
    assert q == p and q.covers() == p.covers()


def test_hash_and_equality():
    assert v3() == v3()
    assert hash(v3()) == hash(v3())
    assert v3() != l3()
    assert len({v3(), v3(), l3()}) == 2


def test_mask_set_round_trip():
    p = d4()
    for s in range(1 << 4):
        assert p.mask_of(p.set_of(s)) == s
    with pytest.raises(InputError):
        p.mask_of([9])


@st.composite
def random_poset(draw):
    n = draw(st.integers(min_value=0, max_value=6))
    pairs = draw(st.lists(
        st.tuples(st.integers(0, max(0, n - 1)), st.integers(0, max(0, n - 1))),
        max_size=10))
    pairs = [(i, j) for i, j in pairs if i != j]
    rel = bf.closure_pairs(n, pairs)
    if any((j, i) in rel for i, j in rel if i != j):
        return draw(st.just(None))
    return Poset(n, pairs)


@settings(max_examples=120, deadline=None)
@given(random_poset())
def test_closure_operators_are_closures(p):
    if p is None:
        return
    for s in range(min(64, 1 << p.n)):
        up = p.up_closure_mask(s)
        assert up & s == s
        assert p.up_closure_mask(up) == up
        dn = p.down_closure_mask(s)
        assert p.down_closure_mask(dn) == dn
        assert p.interior_mask(s) & ~s == 0


@settings(max_examples=120, deadline=None)
@given(random_poset())
def test_canonical_stable_under_hypothesis_relabel(p):
    if p is None or p.n > 5:
        return
    perm = list(range(p.n))[::-1]
    moved = [0] * p.n
    for i in range(p.n):
        for j in range(p.n):
            if p.up[i] >> j & 1:
                moved[perm[i]] |= 1 << perm[j]
    assert Poset.from_up_rows(moved).canonical() == p.canonical()
