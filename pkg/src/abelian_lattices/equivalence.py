"""Arithmetic criterion for isomorphism of the subgroup lattices of two
finite abelian groups, plus executable verification sweeps.

Two signatures (d_1, ..., d_k) and (d'_1, ..., d'_k') have isomorphic
lattices iff

  a) k = k';
  b) d_i = d'_i for i < k;
  c) writing m for d_1 * ... * d_{k-1}, the primes of d_k outside m and
     the primes of d'_k outside m (the "new" primes P and Q) have the same
     cardinality r; for r = 0 this forces d_k = d'_k, and for r >= 1 the
     parts of d_k and d'_k supported on the old primes must agree and some
     bijection P -> Q must match prime exponents exactly.

Condition c is read at the level of prime exponents; the weaker literal
reading, as a rational identity d_k/d'_k = prod (p_j/q_j)^{s_j}, is kept
in ratio_condition_literal because the two disagree (first at (24) vs
(36)) and the divergence is worth demonstrating.

The verify_* sweeps exercise the criterion over small catalogs and, where
the groups are small enough, check it against lattices built and compared
by brute force.
"""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from functools import lru_cache
from itertools import permutations, product
from math import prod

from . import oracle, posets
from .arith import factorize, gcd_many, prime_support
from .errors import ResourceLimitError, UsageError
from .fundamental import GroupSignature, as_signature, build_lattice, enumerate_lattice

# Sweeps cross-check the criterion against brute force only while the group
# order stays at desk scale; beyond this the lattices get unreasonably big
# (Z_2^8 already has 417199 subgroups).
CROSS_CHECK_BOUND = 100


@dataclass(frozen=True)
class EquivalenceReport:
    'Trace of the criterion: which condition decided, and the data behind c).'

    left: tuple[int, ...]
    right: tuple[int, ...]
    equivalent: bool
    same_length: bool
    same_prefix: bool
    r: int | None = None
    new_primes_left: tuple[int, ...] = ()
    new_primes_right: tuple[int, ...] = ()
    cofactor_left: int | None = None
    cofactor_right: int | None = None
    pairing: tuple[tuple[int, int, int], ...] = ()  # (p, q, shared exponent)
    detail: str = ''


@dataclass
class TheoremReport:
    'Result of one verification sweep.'

    theorem: str
    max_order: int
    cases: int
    counterexamples: list = field(default_factory=list)
    oracle_checked: int = 0
    elapsed_seconds: float = 0.0

    @property
    def passed(self) -> bool:
        return not self.counterexamples


def _new_primes(last: int, old: set[int]) -> tuple[int, ...]:
    return tuple(p for p in prime_support(last) if p not in old)


def tuples_equivalent(left, right) -> EquivalenceReport:
    'Decide the criterion and report the full condition trace.'
    g, h = as_signature(left), as_signature(right)
    if g.k != h.k:
        return EquivalenceReport(g.d, h.d, False, False, False, detail='lengths differ')
    if g.d[:-1] != h.d[:-1]:
        return EquivalenceReport(g.d, h.d, False, True, False, detail='prefixes differ')
    dk, dk2 = g.d[-1], h.d[-1]
    old = set(prime_support(prod(g.d[:-1])))
    fl, fr = factorize(dk), factorize(dk2)
    P = tuple(p for p in fl.primes if p not in old)
    Q = tuple(q for q in fr.primes if q not in old)
    if len(P) != len(Q):
        return EquivalenceReport(
            g.d, h.d, False, True, True,
            new_primes_left=P, new_primes_right=Q,
            detail='new-prime counts differ')
    r = len(P)
    if r == 0:
        return EquivalenceReport(
            g.d, h.d, dk == dk2, True, True, r=0,
            cofactor_left=dk, cofactor_right=dk2,
            detail='no new primes, last factors must be equal')
    cl = dk // prod(p ** fl.exponent(p) for p in P)
    cr = dk2 // prod(q ** fr.exponent(q) for q in Q)
    if cl != cr:
        return EquivalenceReport(
            g.d, h.d, False, True, True, r=r,
            new_primes_left=P, new_primes_right=Q,
            cofactor_left=cl, cofactor_right=cr,
            detail='old-prime cofactors differ')
    left_exp = sorted((fl.exponent(p), p) for p in P)
    right_exp = sorted((fr.exponent(q), q) for q in Q)
    if [e for e, _ in left_exp] != [e for e, _ in right_exp]:
        return EquivalenceReport(
            g.d, h.d, False, True, True, r=r,
            new_primes_left=P, new_primes_right=Q,
            cofactor_left=cl, cofactor_right=cr,
            detail='new-prime exponent multisets differ')
    pairing = tuple((p, q, e) for (e, p), (_, q) in zip(left_exp, right_exp))
    return EquivalenceReport(
        g.d, h.d, True, True, True, r=r,
        new_primes_left=P, new_primes_right=Q,
        cofactor_left=cl, cofactor_right=cr,
        pairing=pairing, detail='exponent-matching bijection found')


def pairing_by_search(left, right) -> tuple[tuple[int, int, int], ...] | None:
    """Fallback for condition c: try every bijection P -> Q directly
    (r <= 8) and return the first exponent-preserving one, or None.

    Must agree with tuples_equivalent on whether a pairing exists.
    """
    g, h = as_signature(left), as_signature(right)
    if g.k != h.k or g.d[:-1] != h.d[:-1]:
        return None
    old = set(prime_support(prod(g.d[:-1])))
    fl, fr = factorize(g.d[-1]), factorize(h.d[-1])
    P = tuple(p for p in fl.primes if p not in old)
    Q = tuple(q for q in fr.primes if q not in old)
    if len(P) != len(Q):
        return None
    if len(P) > 8:
        raise ResourceLimitError('bijection search is limited to r <= 8')
    cl = g.d[-1] // prod(p ** fl.exponent(p) for p in P)
    cr = h.d[-1] // prod(q ** fr.exponent(q) for q in Q)
    if cl != cr or (len(P) == 0 and g.d[-1] != h.d[-1]):
        return None
    for image in permutations(Q):
        if all(fl.exponent(p) == fr.exponent(q) for p, q in zip(P, image)):
            return tuple((p, q, fl.exponent(p)) for p, q in zip(P, image))
    return None


def _difference_system_feasible(target: dict[int, int],
                                pairs: list[tuple[int, int]]) -> bool:
    """Whether positive integers s_j exist with
    prod (p_j / q_j)^{s_j} = prod t^{target[t]}.

    Each prime appears at most once among the p_j and once among the q_j,
    so the valuation equations form a difference system solvable component
    by component.
    """
    r = len(pairs)
    as_left = {p: i for i, (p, _) in enumerate(pairs)}
    as_right = {q: i for i, (_, q) in enumerate(pairs)}
    anchors: list[tuple[int, int]] = []          # (variable, required value)
    edges: dict[int, list[tuple[int, int]]] = {i: [] for i in range(r)}
    for t, val in target.items():
        a, b = as_left.get(t), as_right.get(t)
        if a is None and b is None:
            if val:
                return False
        elif b is None:
            anchors.append((a, val))
        elif a is None:
            anchors.append((b, -val))
        elif a == b:
            if val:
                return False
        else:
            edges[a].append((b, -val))           # s_b = s_a - val
            edges[b].append((a, val))            # s_a = s_b + val
    base = [None] * r
    for root in range(r):
        if base[root] is not None:
            continue
        base[root] = 0
        queue = [root]
        component = [root]
        while queue:
            x = queue.pop()
            for y, delta in edges[x]:
                want = base[x] + delta
                if base[y] is None:
                    base[y] = want
                    queue.append(y)
                    component.append(y)
                elif base[y] != want:
                    return False
        offsets = {val - base[x] for x, val in anchors if x in set(component)}
        if len(offsets) > 1:
            return False
        if offsets:
            off = offsets.pop()
            if any(base[x] + off < 1 for x in component):
                return False
        # Unanchored components shift freely, so some positive choice works.
    return True


def ratio_condition_literal(left, right) -> bool:
    """The literal rational-identity reading of condition c: some bijection
    P -> Q and positive integer exponents s_j with
    d_k / d'_k = prod (p_j / q_j)^{s_j}.

    Kept as a diagnostic.  It agrees with tuples_equivalent whenever the
    new-prime sets are disjoint, but is strictly weaker in general: it
    accepts (24) vs (36), whose lattices have 8 and 9 elements.
    """
    g, h = as_signature(left), as_signature(right)
    if g.k != h.k or g.d[:-1] != h.d[:-1]:
        return False
    dk, dk2 = g.d[-1], h.d[-1]
    old = set(prime_support(prod(g.d[:-1])))
    fl, fr = factorize(dk), factorize(dk2)
    P = tuple(p for p in fl.primes if p not in old)
    Q = tuple(q for q in fr.primes if q not in old)
    if len(P) != len(Q):
        return False
    if len(P) == 0:
        return dk == dk2
    if len(P) > 8:
        raise ResourceLimitError('bijection search is limited to r <= 8')
    vl, vr = dict(fl.factors), dict(fr.factors)
    target = {t: vl.get(t, 0) - vr.get(t, 0) for t in set(vl) | set(vr)}
    return any(
        _difference_system_feasible(target, list(zip(P, image)))
        for image in permutations(Q)
    )


def lattices_isomorphic(left, right) -> bool:
    'The criterion as a plain yes/no: are the two subgroup lattices isomorphic?'
    return tuples_equivalent(left, right).equivalent


def power_signature(sig, n: int) -> GroupSignature:
    'Signature of the n-th direct power: each invariant factor repeated n times.'
    sig = as_signature(sig)
    if not isinstance(n, int) or isinstance(n, bool) or n < 1:
        raise UsageError(f'power must be an integer >= 1, got {n!r}')
    return GroupSignature(tuple(d for d in sig.d for _ in range(n)))


def is_lattice_determined(sig) -> bool:
    """Whether the group is pinned down by its lattice: the last invariant
    factor brings no new prime, i.e. the primes of d_k all divide
    d_1 * ... * d_{k-1}.  Always false for k = 1.
    """
    sig = as_signature(sig)
    old = set(prime_support(prod(sig.d[:-1])))
    return set(prime_support(sig.d[-1])) == old


def signatures_up_to(max_order: int) -> list[GroupSignature]:
    'All signatures with group order <= max_order, in lexicographic order.'
    found: list[tuple[int, ...]] = []

    def grow(prefix: tuple[int, ...], order: int) -> None:
        found.append(prefix)
        last = prefix[-1]
        nxt = last
        while order * nxt <= max_order:
            grow(prefix + (nxt,), order * nxt)
            nxt += last

    d1 = 2
    while d1 <= max_order:
        grow((d1,), d1)
        d1 += 1
    found.sort()
    return [GroupSignature(t) for t in found]


@lru_cache(maxsize=None)
def _brute_force_isomorphic(g: GroupSignature, h: GroupSignature) -> bool:
    'Independent route: enumerate subgroups, build lattices, search a witness.'
    return posets.are_isomorphic(oracle.subgroup_lattice(g), oracle.subgroup_lattice(h))


def verify_theorem_a(max_order: int, bound: int = oracle.DEFAULT_ORDER_BOUND) -> TheoremReport:
    """For every signature with order <= max_order, the matrix model must
    match the oracle: same number of subgroups and isomorphic lattices.
    """
    start = time.perf_counter()
    report = TheoremReport('theorem-a', max_order, 0)
    for sig in signatures_up_to(max_order):
        report.cases += 1
        report.oracle_checked += 1
        matrix_count = len(enumerate_lattice(sig))
        oracle_count = len(oracle.all_subgroups(sig, bound))
        if matrix_count != oracle_count:
            report.counterexamples.append({
                'signature': list(sig.d), 'kind': 'count-mismatch',
                'matrix_count': matrix_count, 'oracle_count': oracle_count})
            continue
        if not posets.are_isomorphic(build_lattice(sig), oracle.subgroup_lattice(sig, bound)):
            report.counterexamples.append({
                'signature': list(sig.d), 'kind': 'order-structure-mismatch'})
    report.elapsed_seconds = time.perf_counter() - start
    return report


def verify_theorem_b(max_order: int) -> TheoremReport:
    """For every pair of signatures at or below max_order, the arithmetic
    criterion must agree with brute-force isomorphism of the built lattices.
    """
    start = time.perf_counter()
    report = TheoremReport('theorem-b', max_order, 0)
    sigs = signatures_up_to(max_order)
    for i, g in enumerate(sigs):
        for h in sigs[i:]:
            report.cases += 1
            report.oracle_checked += 1
            verdict = lattices_isomorphic(g, h)
            brute = posets.are_isomorphic(build_lattice(g), build_lattice(h))
            if verdict != brute:
                report.counterexamples.append({
                    'left': list(g.d), 'right': list(h.d),
                    'criterion': verdict, 'brute_force': brute,
                    'kind': 'criterion-vs-brute-force'})
    report.elapsed_seconds = time.perf_counter() - start
    return report


def verify_theorem_1(max_order: int, criterion=None,
                     cross_check_bound: int = CROSS_CHECK_BOUND) -> TheoremReport:
    """Lattice-determined signatures are isomorphic (by the criterion) only
    to themselves.  Pairs small enough are also cross-checked against the
    oracle lattices; criterion may be swapped out to prove the sweep can
    fail.
    """
    start = time.perf_counter()
    crit = criterion if criterion is not None else lattices_isomorphic
    report = TheoremReport('theorem-1', max_order, 0)
    sigs = signatures_up_to(max_order)
    for i, g in enumerate(sigs):
        for h in sigs[i:]:
            if not (is_lattice_determined(g) or is_lattice_determined(h)):
                continue
            report.cases += 1
            verdict = bool(crit(g, h))
            if verdict != (g == h):
                report.counterexamples.append({
                    'left': list(g.d), 'right': list(h.d),
                    'criterion': verdict, 'kind': 'lattice-determined'})
            if g.order <= cross_check_bound and h.order <= cross_check_bound:
                report.oracle_checked += 1
                brute = _brute_force_isomorphic(g, h)
                if brute != verdict:
                    report.counterexamples.append({
                        'left': list(g.d), 'right': list(h.d),
                        'criterion': verdict, 'brute_force': brute,
                        'kind': 'criterion-vs-brute-force'})
    report.elapsed_seconds = time.perf_counter() - start
    return report


def verify_theorem_2(max_order: int, n: int = 2,
                     cross_check_bound: int = CROSS_CHECK_BOUND) -> TheoremReport:
    """Distinct groups stay distinguishable after taking n-th powers
    (n >= 2): the criterion on the power signatures holds iff G = H.
    """
    if not isinstance(n, int) or n < 2:
        raise UsageError(f'theorem-2 needs a power n >= 2, got {n!r}')
    start = time.perf_counter()
    report = TheoremReport('theorem-2', max_order, 0)
    sigs = signatures_up_to(max_order)
    for i, g in enumerate(sigs):
        gp = power_signature(g, n)
        for h in sigs[i:]:
            hp = power_signature(h, n)
            report.cases += 1
            verdict = lattices_isomorphic(gp, hp)
            if verdict != (g == h):
                report.counterexamples.append({
                    'left': list(g.d), 'right': list(h.d), 'power': n,
                    'criterion': verdict, 'kind': 'power-criterion'})
            if gp.order <= cross_check_bound and hp.order <= cross_check_bound:
                report.oracle_checked += 1
                brute = _brute_force_isomorphic(gp, hp)
                if brute != verdict:
                    report.counterexamples.append({
                        'left': list(gp.d), 'right': list(hp.d),
                        'criterion': verdict, 'brute_force': brute,
                        'kind': 'criterion-vs-brute-force'})
    report.elapsed_seconds = time.perf_counter() - start
    return report


def _xgcd(a: int, b: int) -> tuple[int, int, int]:
    'Extended Euclid: returns (g, x, y) with a*x + b*y = g = gcd(a, b).'
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def _bezout_coefficients(values: tuple[int, ...]) -> tuple[int, list[int]]:
    'gcd of the tuple plus coefficients writing it as an integer combination.'
    g = values[0]
    coeffs = [1] + [0] * (len(values) - 1)
    for idx in range(1, len(values)):
        g2, x, y = _xgcd(g, values[idx])
        coeffs = [c * x for c in coeffs]
        coeffs[idx] = y
        g = g2
    return g, coeffs


def _exponent_tuples(max_exp: int, max_len: int = 3):
    for r in range(1, max_len + 1):
        yield from product(range(2, max_exp + 1), repeat=r)


def _rederive_equal_length(g: GroupSignature, h: GroupSignature,
                           m: tuple[int, ...], n: tuple[int, ...]) -> bool:
    """Re-run the arithmetic that pins k = k' from k*m_i = k'*n_i when
    gcd(m) = gcd(n): with Bezout coefficients for d = gcd(m), k*d equals
    k' times a multiple of d, so k' | k, and symmetrically k | k'.
    """
    k, k2 = g.k, h.k
    if any(k * mi != k2 * ni for mi, ni in zip(m, n)):
        return False
    d, alphas = _bezout_coefficients(m)
    if sum(a * mi for a, mi in zip(alphas, m)) != d or gcd_many(n) != d:
        return False
    t = sum(a * ni for a, ni in zip(alphas, n))
    if k * d != k2 * t or t % d:
        return False
    e, betas = _bezout_coefficients(n)
    if e != d or sum(b * ni for b, ni in zip(betas, n)) != e:
        return False
    u = sum(b * mi for b, mi in zip(betas, m))
    if k2 * e != k * u or u % e:
        return False
    return k == k2 * (t // d) and k2 == k * (u // e) and k == k2 and tuple(m) == tuple(n)


def verify_theorem_3(max_order: int, max_exp: int,
                     cross_check_bound: int = CROSS_CHECK_BOUND) -> TheoremReport:
    """If gcd(m) = gcd(n) and the criterion matches L(G^{m_i}) with
    L(H^{n_i}) for every i, then G = H.  Each satisfying case re-derives
    k = k' through the Bezout argument as well.
    """
    start = time.perf_counter()
    report = TheoremReport('theorem-3', max_order, 0)
    sigs = signatures_up_to(max_order)
    tuples = list(_exponent_tuples(max_exp))
    pairs = [(m, n) for m in tuples for n in tuples
             if len(m) == len(n) and gcd_many(m) == gcd_many(n)]
    for i, g in enumerate(sigs):
        for h in sigs[i:]:
            for m, n in pairs:
                report.cases += 1
                if not all(lattices_isomorphic(power_signature(g, mi),
                                               power_signature(h, ni))
                           for mi, ni in zip(m, n)):
                    continue
                if not _rederive_equal_length(g, h, m, n):
                    report.counterexamples.append({
                        'left': list(g.d), 'right': list(h.d),
                        'm': list(m), 'n': list(n), 'kind': 'bezout-derivation'})
                    continue
                if g != h:
                    report.counterexamples.append({
                        'left': list(g.d), 'right': list(h.d),
                        'm': list(m), 'n': list(n), 'kind': 'power-family'})
                elif all(g.order ** mi <= cross_check_bound
                         and h.order ** ni <= cross_check_bound
                         for mi, ni in zip(m, n)):
                    report.oracle_checked += 1
                    if not all(
                        _brute_force_isomorphic(power_signature(g, mi),
                                                power_signature(h, ni))
                        for mi, ni in zip(m, n)
                    ):
                        report.counterexamples.append({
                            'left': list(g.d), 'right': list(h.d),
                            'm': list(m), 'n': list(n),
                            'kind': 'criterion-vs-brute-force'})
    report.elapsed_seconds = time.perf_counter() - start
    return report


def explore_open_problem(max_order: int, max_exp: int) -> list[dict]:
    """Hunt for pairs G != H and exponent tuples with gcd(m) != gcd(n)
    whose powers the criterion cannot tell apart at any index: the open
    direction once the equal-gcd hypothesis is dropped.

    Returns JSON-ready findings in deterministic catalog order.
    """
    findings: list[dict] = []
    sigs = signatures_up_to(max_order)
    tuples = list(_exponent_tuples(max_exp))
    pairs = [(m, n) for m in tuples for n in tuples
             if len(m) == len(n) and gcd_many(m) != gcd_many(n)]
    for i, g in enumerate(sigs):
        for h in sigs[i + 1:]:
            for m, n in pairs:
                if all(lattices_isomorphic(power_signature(g, mi),
                                           power_signature(h, ni))
                       for mi, ni in zip(m, n)):
                    findings.append({
                        'left': list(g.d), 'right': list(h.d),
                        'm': list(m), 'n': list(n),
                        'gcd_m': gcd_many(m), 'gcd_n': gcd_many(n),
                        'powers': [[list(power_signature(g, mi).d),
                                    list(power_signature(h, ni).d)]
                                   for mi, ni in zip(m, n)]})
    return findings
