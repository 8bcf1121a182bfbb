'''Acceptance checklist, one test per criterion.

Each test prints a single summary line so a captured log reads as a
checklist; the pytest verdict per test is the pass/fail signal.
'''

import time

import bruteforce as bf
from finspec import duality, reports
from finspec.duality import downset_lattice, poset_roundtrip, stone_roundtrip
from finspec.enumeration import count_posets, enumerate_posets
from finspec.fixtures import a2, d4, l3, m3, n5, v3
from finspec.poset import Poset


def each_poset(max_points):
    for n in range(max_points + 1):
        yield from enumerate_posets(n)


def is_antichain(poset):
    return all(poset.up[x] == 1 << x for x in range(poset.n))


def clear_report_caches():
    for fn in (reports.pc_space_report, reports.stone_report,
               reports.qccl_stone_report, reports.heyting_report,
               reports.root_forest_report, reports.collapse_report):
        fn.cache_clear()
    duality._downset_lattice_cached.cache_clear()


def test_criterion_01_stone_readings_agree_in_budget():
    '''Six Stone readings agree on every poset up to 6 points, under 60s.'''
    clear_report_caches()
    start = time.perf_counter()
    checked = disagreements = 0
    for poset in each_poset(6):
        if not reports.stone_report(poset).agreement:
            disagreements += 1
        checked += 1
    elapsed = time.perf_counter() - start
    assert checked == 406
    assert disagreements == 0
    assert elapsed < 60.0
    print('criterion 01: PASS stone agreement on %d posets in %.2fs'
          % (checked, elapsed))


def test_criterion_02_pc_and_heyting_all_true():
    checked = 0
    for poset in each_poset(6):
        assert reports.pc_space_report(poset).all_true
        assert reports.heyting_report(poset).all_true
        checked += 1
    print('criterion 02: PASS pc-space and heyting all true on %d posets'
          % checked)


def test_criterion_03_roundtrips():
    checked = 0
    for poset in each_poset(5):
        lattice = downset_lattice(poset)
        assert stone_roundtrip(lattice) is not None
        assert poset_roundtrip(poset)
        checked += 1
    assert stone_roundtrip(m3()) is None
    assert stone_roundtrip(n5()) is None
    print('criterion 03: PASS roundtrips on %d posets; m3 and n5 refused'
          % checked)


def test_criterion_04_stone_iff_minimal_primes_coprime():
    checked = 0
    for poset in each_poset(6):
        lattice = downset_lattice(poset)
        coprime = lattice.minimal_primes_coprime()
        assert lattice.is_stone() == coprime
        if not coprime:
            first, second = lattice.non_coprime_witness()
            assert first.mask != second.mask
        checked += 1
    first, second = downset_lattice(v3()).non_coprime_witness()
    assert {first.mask, second.mask} == {0b00011, 0b00101}
    print('criterion 04: PASS stone = coprime minimal primes on %d lattices'
          % checked)


def test_criterion_05_residuation_identities():
    checked = 0
    for poset in each_poset(5):
        lattice = downset_lattice(poset)
        size = lattice.n
        for a in range(size):
            star = lattice.pseudocomplement(a)
            assert star is not None
            assert lattice.implication(a, lattice.bottom) == star
            assert lattice.meet(a, star) == lattice.bottom
            star_star = lattice.pseudocomplement(star)
            assert lattice.leq(a, star_star)
            assert star == lattice.pseudocomplement(star_star)
            for b in range(size):
                arrow = lattice.implication(a, b)
                assert arrow is not None
                for x in range(size):
                    assert lattice.leq(x, arrow) == \
                        lattice.leq(lattice.meet(a, x), b)
        checked += 1
    print('criterion 05: PASS residuation on %d down-set lattices' % checked)


def test_criterion_06_qccl_matches_dual_stone():
    checked = 0
    for poset in each_poset(6):
        mirror = reports.qccl_stone_report(poset)
        straight = reports.stone_report(poset.dual())
        assert mirror.all_true == straight.all_true
        assert mirror.agreement and straight.agreement
        checked += 1
    print('criterion 06: PASS qccl report mirrors dual stone on %d posets'
          % checked)


def test_criterion_07_golden_fixture_table():
    profile = reports.classify(v3()).as_dict()
    assert [profile[k] for k in ('heyting', 'stone', 'pseudocomplemented',
                                 'boolean', 'root_system', 'forest',
                                 'normal')] == \
        [True, False, True, False, True, False, True]
    profile = reports.classify(l3()).as_dict()
    assert (profile['stone'], profile['forest'], profile['normal']) == \
        (True, True, False)
    assert all(reports.classify(a2()).as_dict().values())
    profile = reports.classify(d4()).as_dict()
    assert (profile['stone'], profile['root_system'], profile['normal']) == \
        (True, False, True)
    assert m3().is_pseudocomplemented() is False
    print('criterion 07: PASS golden table for v3, l3, a2, d4, m3')


def test_criterion_08_generic_complements():
    checked = 0
    for poset in each_poset(5):
        mins = poset.minimal_mask
        for u_mask in poset.downset_masks_all:
            u = poset.set_of(u_mask)
            v = reports.generic_complement(poset, u)
            assert v is not None
            v_mask = poset.mask_of(v)
            assert u_mask & v_mask == 0
            assert poset.is_dense_mask(u_mask | v_mask)
            u_min = sum(1 << x for x in u
                        if poset.down[x] & u_mask == 1 << x)
            v_min = sum(1 << x for x in v
                        if poset.down[x] & v_mask == 1 << x)
            assert u_min & v_min == 0
            assert u_min | v_min == mins
            checked += 1
    print('criterion 08: PASS generic complements for %d down-sets' % checked)


def test_criterion_09_counts_and_determinism(capsys):
    assert [count_posets(n) for n in range(1, 7)] == [1, 2, 5, 16, 63, 318]
    for n in range(5):
        reps = []
        for rel in bf.all_labeled_orders(n):
            rows = bf.rows_of_rel(n, rel)
            if not any(bf.isomorphic_by_search(rows, seen) for seen in reps):
                reps.append(rows)
        assert len(reps) == count_posets(n)
    from finspec.cli import main
    outputs = []
    for jobs in ('1', '2'):
        main(['sweep', '5', '--json', '--jobs', jobs])
        outputs.append(capsys.readouterr().out)
        main(['sweep', '5', '--jobs', jobs])
        outputs.append(capsys.readouterr().out)
    assert outputs[0] == outputs[2]
    assert outputs[1] == outputs[3]
    print('criterion 09: PASS counts match; sweep output identical across jobs')


def test_criterion_10_collapse_iff_antichain():
    checked = violations = 0
    for poset in each_poset(6):
        flat = is_antichain(poset)
        for direction in ('min_side', 'max_side'):
            report = reports.collapse_report(poset, direction)
            if report.hypothesis_map['collapse'] != flat:
                violations += 1
            if report.hypothesis_satisfied and not (report.all_true
                                                    and report.agreement):
                violations += 1
            checked += 1
    assert violations == 0
    print('criterion 10: PASS collapse hypotheses single out %d antichain '
          'checks among %d' % (sum(2 for p in each_poset(6)
                                   if is_antichain(p)), checked))
