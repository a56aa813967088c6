"""Acceptance checks. Each test covers one headline claim at the scale it
is stated for, asserts the result and the runtime bound, and prints a
single PASS/FAIL line that survives pytest's capture."""

import sys
import time

from abelian_lattices.arith import divisors
from abelian_lattices.equivalence import (
    explore_open_problem,
    lattices_isomorphic,
    power_signature,
    ratio_condition_literal,
    signatures_up_to,
    tuples_equivalent,
    verify_theorem_1,
    verify_theorem_2,
    verify_theorem_3,
    verify_theorem_b,
)
from abelian_lattices.fundamental import GroupSignature, build_lattice, enumerate_lattice
from abelian_lattices.oracle import all_subgroups, subgroup_lattice
from abelian_lattices.posets import are_isomorphic, is_modular


def report(name, ok, elapsed, bound, detail=''):
    verdict = 'PASS' if ok and elapsed < bound else 'FAIL'
    tail = f' {detail}' if detail else ''
    print(f'{name}: {verdict} ({elapsed:.1f}s of {bound:.0f}s allowed){tail}',
          file=sys.__stdout__)
    assert ok, f'{name}: {detail}'
    assert elapsed < bound, f'{name}: took {elapsed:.1f}s, bound {bound}s'


def test_01_cyclic_groups_have_one_member_per_divisor():
    t0 = time.perf_counter()
    bad = [d for d in range(2, 1001)
           if len(enumerate_lattice(GroupSignature((d,)))) != len(divisors(d))]
    report('01 cyclic divisor count d<=1000', not bad,
           time.perf_counter() - t0, 10, f'mismatches={bad[:5]}')


def test_02_matrix_count_equals_subgroup_count_up_to_order_100():
    t0 = time.perf_counter()
    anchors = {(2, 2): 5, (2, 4): 8, (2, 2, 2): 16, (6,): 4}
    bad = []
    for sig in signatures_up_to(100):
        n = len(enumerate_lattice(sig))
        if n != len(all_subgroups(sig)):
            bad.append(sig.d)
        if sig.d in anchors and n != anchors[sig.d]:
            bad.append(sig.d)
    report('02 counts vs oracle, order<=100', not bad,
           time.perf_counter() - t0, 120, f'mismatches={bad[:5]}')


def test_03_matrix_lattice_isomorphic_to_subgroup_lattice():
    t0 = time.perf_counter()
    bad = [sig.d for sig in signatures_up_to(100)
           if not are_isomorphic(build_lattice(sig), subgroup_lattice(sig))]
    report('03 lattice vs oracle order, order<=100', not bad,
           time.perf_counter() - t0, 300, f'mismatches={bad[:5]}')


def test_04_criterion_matches_brute_force_on_all_pairs():
    t0 = time.perf_counter()
    rep = verify_theorem_b(100)
    fixtures = (lattices_isomorphic((6,), (10,))
                and lattices_isomorphic((2, 6), (2, 10)))
    report('04 equivalence criterion vs brute force, all pairs order<=100',
           rep.passed and fixtures, time.perf_counter() - t0, 600,
           f'cases={rep.cases} counterexamples={len(rep.counterexamples)}')


def test_05_every_lattice_is_modular():
    t0 = time.perf_counter()
    bad = [sig.d for sig in signatures_up_to(100)
           if not is_modular(build_lattice(sig))]
    report('05 modularity over the catalog', not bad,
           time.perf_counter() - t0, 300, f'failures={bad[:5]}')


def test_06_squaring_separates_6_and_10():
    t0 = time.perf_counter()
    base = lattices_isomorphic((6,), (10,))
    squared = lattices_isomorphic(power_signature((6,), 2),
                                  power_signature((10,), 2))
    n6 = len(all_subgroups(GroupSignature((6, 6))))
    n10 = len(all_subgroups(GroupSignature((10, 10))))
    ok = base and not squared and n6 == 30 and n10 == 40
    report('06 squaring separates (6) from (10)', ok,
           time.perf_counter() - t0, 60,
           f'base={base} squared={squared} |L(6^2)|={n6} |L(10^2)|={n10}')


def test_07_power_sweep():
    t0 = time.perf_counter()
    r2 = verify_theorem_2(30, 2)
    r3 = verify_theorem_2(30, 3)
    ok = r2.passed and r3.passed
    report('07 power sweep order<=30, n in {2,3}', ok,
           time.perf_counter() - t0, 60,
           f'cases={r2.cases}+{r3.cases} '
           f'counterexamples={len(r2.counterexamples) + len(r3.counterexamples)}')


def test_08_determined_and_all_power_sweeps():
    t0 = time.perf_counter()
    r1 = verify_theorem_1(50)
    r3 = verify_theorem_3(16, 4)
    report('08 determined sweep (50) and all-power sweep (16, exp<=4)',
           r1.passed and r3.passed, time.perf_counter() - t0, 120,
           f'cases={r1.cases}+{r3.cases} '
           f'counterexamples={len(r1.counterexamples) + len(r3.counterexamples)}')


def test_09_explorer_reports_the_known_power_collision():
    t0 = time.perf_counter()
    findings = explore_open_problem(8, 3)
    hit = [f for f in findings
           if f['left'] == [2, 2] and f['right'] == [2, 2, 2]
           and f['m'] == [3] and f['n'] == [2]]
    same_power = (power_signature((2, 2), 3) == power_signature((2, 2, 2), 2))
    report('09 explorer finds (2,2)^3 vs (2,2,2)^2', bool(hit) and same_power,
           time.perf_counter() - t0, 60, f'findings={len(findings)}')


def test_10_strict_reading_beats_literal_ratio_reading():
    t0 = time.perf_counter()
    strict = tuples_equivalent((24,), (36,)).equivalent
    literal = ratio_condition_literal((24,), (36,))
    n24 = len(enumerate_lattice(GroupSignature((24,))))
    n36 = len(enumerate_lattice(GroupSignature((36,))))
    brute = are_isomorphic(build_lattice(GroupSignature((24,))),
                           build_lattice(GroupSignature((36,))))
    ok = (strict is False and literal is True
          and n24 == 8 and n36 == 9 and brute is False)
    report('10 strict vs literal reading on (24),(36)', ok,
           time.perf_counter() - t0, 60,
           f'strict={strict} literal={literal} sizes={n24},{n36} brute={brute}')
