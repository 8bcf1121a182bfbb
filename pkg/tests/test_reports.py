'''Report layer: frozen verdicts, hypothesis gating, sweeps.'''

import pytest

from finspec import _bits_py as pure
from finspec.errors import InputError, PreconditionError, ResourceLimitError
from finspec.fixtures import a2, antichain, c2, chain_poset, d4, l3, v3
from finspec.poset import Poset, are_isomorphic
from finspec.reports import (PROFILE_FLAGS, THEOREMS, Condition,
                             ConditionReport, classify, collapse_report,
                             generic_complement, heyting_report,
                             pc_space_report, qccl_stone_report,
                             root_forest_report, stone_report, sweep,
                             theorem_report)


def each_poset(max_points):
    for n in range(max_points + 1):
        for rows in pure.unlabeled_reps(n):
            yield Poset.from_up_rows(rows)


def test_stone_report_on_v3_all_false():
    # the smallest non-Stone space fails every reading at once
    rep = stone_report(v3())
    assert rep.verdicts == {
        'lattice_stone': False,
        'closures_open': False,
        'confluent': False,
        'unique_min_below': False,
        'min_map_spectral': False,
        'min_retraction': False,
    }
    assert rep.agreement and not rep.all_true
    assert rep.witness == frozenset({0})


def test_stone_report_on_chain_all_true():
    rep = stone_report(chain_poset(3))
    assert rep.all_true and rep.agreement
    assert rep.witness is None


def test_qccl_report_on_l3_all_false():
    rep = qccl_stone_report(l3())
    assert rep.verdicts == {
        'upset_lattice_stone': False,
        'inverse_closures_clopen': False,
        'normal_and_upset_lattice_pc': False,
        'normal_and_max_patch_closed': False,
    }
    assert rep.agreement and not rep.all_true
    assert rep.witness == frozenset({1})


def test_pc_and_heyting_always_true_small():
    # open-set lattices of finite spaces are Heyting, hence pseudocomplemented
    for p in each_poset(4):
        assert pc_space_report(p).all_true
        assert heyting_report(p).all_true


def test_collapse_gating_on_v3():
    '''A failed hypothesis leaves verdicts mixed but agreement vacuous.'''
    rep = collapse_report(v3(), 'min_side')
    assert rep.hypotheses == (('collapse', False),)
    assert not rep.hypothesis_satisfied
    assert rep.verdicts == {
        'boolean_space': False,
        'downset_lattice_stone': False,
        'esakia': True,
        'pc_space': True,
        'min_points_patch_closed': True,
    }
    assert rep.agreement
    assert not rep.all_true


def test_collapse_all_true_on_antichains():
    for p in (a2(), chain_poset(1), antichain(3)):
        for direction in ('min_side', 'max_side'):
            rep = collapse_report(p, direction)
            assert rep.hypothesis_satisfied
            assert rep.all_true and rep.agreement


def test_collapse_direction_validated():
    with pytest.raises(InputError):
        collapse_report(v3(), 'sideways')


def test_root_forest_hypotheses():
    assert root_forest_report(v3()).hypothesis_map == {
        'root_side': True, 'forest_side': False}
    assert root_forest_report(l3()).hypothesis_map == {
        'root_side': False, 'forest_side': True}
    assert root_forest_report(d4()).hypothesis_map == {
        'root_side': False, 'forest_side': False}
    # at this scale both sides hold outright whenever they apply
    for p in each_poset(4):
        rep = root_forest_report(p)
        assert rep.agreement and rep.all_true


def test_condition_lookup():
    rep = stone_report(v3())
    assert rep.condition('lattice_stone') is False
    with pytest.raises(InputError):
        rep.condition('no_such_reading')


def test_gating_semantics_direct():
    # ungated false condition breaks agreement; gated one does not
    conditions = (Condition('a.x', True, 'a'), Condition('b.y', False, 'b'))
    gated = ConditionReport('demo', conditions, (('a', True), ('b', False)))
    assert gated.agreement and not gated.all_true
    assert not gated.hypothesis_satisfied
    open_rep = ConditionReport('demo', conditions, (('a', True), ('b', True)))
    assert not open_rep.agreement
    assert open_rep.hypothesis_satisfied


def test_generic_complement_frozen():
    assert generic_complement(v3(), {0}) == frozenset({1})
    assert generic_complement(v3(), frozenset()) == frozenset({0, 1, 2})
    assert generic_complement(v3(), {0, 1}) == frozenset()


def test_generic_complement_needs_down_set():
    with pytest.raises(PreconditionError):
        generic_complement(v3(), {2})


def test_generic_complement_properties():
    '''Disjoint from U, dense union, minimal points split exactly.'''
    for p in each_poset(4):
        for u_mask in p.downset_masks_all:
            u = p.set_of(u_mask)
            v = generic_complement(p, u)
            assert v is not None
            v_mask = p.mask_of(v)
            assert u_mask & v_mask == 0
            assert p.is_down_set_mask(v_mask)
            assert p.is_dense_mask(u_mask | v_mask)
            mins = p.minimal_mask
            assert (u_mask & mins) | (v_mask & mins) == mins


def test_classify_frozen_profiles():
    assert classify(v3()).as_dict() == {
        'boolean': False, 'heyting': True, 'stone': False,
        'pseudocomplemented': True, 'root_system': True, 'forest': False,
        'stranded': False, 'confluent': False, 'inv_normal': False,
        'normal': True}
    assert classify(l3()).as_dict() == {
        'boolean': False, 'heyting': True, 'stone': True,
        'pseudocomplemented': True, 'root_system': False, 'forest': True,
        'stranded': False, 'confluent': True, 'inv_normal': True,
        'normal': False}
    assert classify(d4()).as_dict() == {
        'boolean': False, 'heyting': True, 'stone': True,
        'pseudocomplemented': True, 'root_system': False, 'forest': False,
        'stranded': False, 'confluent': True, 'inv_normal': True,
        'normal': True}
    assert all(classify(a2()).as_dict().values())
    profile = classify(c2()).as_dict()
    assert not profile.pop('boolean')
    assert all(profile.values())


def test_theorem_report_dispatch():
    for name in THEOREMS:
        assert theorem_report(v3(), name).theorem == name
    with pytest.raises(InputError):
        theorem_report(v3(), 'fermat')


def test_sweep_counts_and_first_failures():
    summary = sweep(3)
    assert [(r.n, r.count, r.disagreements) for r in summary.rows] == [
        (0, 1, 0), (1, 1, 0), (2, 2, 0), (3, 5, 0)]
    assert summary.total_posets == 9
    assert summary.total_disagreements == 0
    assert all(count == 0 for _, count in summary.theorem_disagreements)
    first_stone = summary.first_failure('stone')
    assert (first_stone.n, first_stone.index) == (3, 4)
    assert are_isomorphic(Poset(first_stone.n, first_stone.covers), v3())
    first_normal = summary.first_failure('normal')
    assert are_isomorphic(Poset(first_normal.n, first_normal.covers), l3())
    assert summary.first_failure('heyting') is None
    assert {f.flag for f in summary.first_failures} <= set(PROFILE_FLAGS)


def test_sweep_parallel_is_identical():
    assert sweep(4, jobs=2) == sweep(4)


def test_sweep_validates_arguments():
    with pytest.raises(InputError):
        sweep(3, jobs=0)
    with pytest.raises(InputError):
        sweep(3, mode='bogus')
    with pytest.raises(ResourceLimitError):
        sweep(99)
