"""Finite posets and lattices over dense boolean relation matrices.

A poset on ids 0..n-1 is held as an n x n bool matrix with leq[i, j] true
iff i <= j.  Reachability products are computed through float32 matmul,
which is exact here (path counts stay far below 2**24), and meet/join
tables are recovered by hashing principal ideals/filters packed into
Python ints.
"""

from __future__ import annotations

import sys
from collections import Counter
from functools import cached_property

import numpy as np

from .errors import (
    InternalInvariantError,
    InvalidOrderError,
    NotALatticeError,
    UsageError,
)


def _bool_product(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    'Boolean matrix product, exact (path counts < 2**24 fit float32).'
    return (a.astype(np.float32) @ b.astype(np.float32)) > 0.5


class FinitePoset:
    'A finite partial order; construct through from_relation.'

    def __init__(self, leq: np.ndarray):
        leq = np.ascontiguousarray(np.asarray(leq, dtype=bool))
        if leq.ndim != 2 or leq.shape[0] != leq.shape[1]:
            raise UsageError('a relation must be a square matrix')
        leq.setflags(write=False)
        self.leq = leq
        self.n = int(leq.shape[0])

    @cached_property
    def covers(self) -> np.ndarray:
        'covers[i, j] true iff j covers i (i < j with nothing between).'
        lt = self.leq & ~np.eye(self.n, dtype=bool)
        out = lt & ~_bool_product(lt, lt)
        out.setflags(write=False)
        return out

    @cached_property
    def hasse_edges(self) -> list[tuple[int, int]]:
        'Covering pairs (lower, upper), sorted.'
        return [(int(i), int(j)) for i, j in np.argwhere(self.covers)]

    @cached_property
    def lower_covers(self) -> list[tuple[int, ...]]:
        cov = self.covers
        return [tuple(int(x) for x in np.flatnonzero(cov[:, i])) for i in range(self.n)]

    @cached_property
    def upper_covers(self) -> list[tuple[int, ...]]:
        cov = self.covers
        return [tuple(int(x) for x in np.flatnonzero(cov[i])) for i in range(self.n)]

    @cached_property
    def ranks(self) -> tuple[int, ...]:
        'Length of a longest chain below each element (minimal elements get 0).'
        # Ascending ideal size is a linear extension: x < y forces |down x| < |down y|.
        order = np.argsort(self.leq.sum(axis=0), kind='stable')
        rank = [0] * self.n
        for i in order:
            below = self.lower_covers[int(i)]
            if below:
                rank[int(i)] = 1 + max(rank[j] for j in below)
        return tuple(rank)


def from_relation(relation) -> FinitePoset:
    """Build a poset from a reflexive relation, closing it transitively.

    Raises UsageError if the relation is not reflexive and InvalidOrderError
    if the transitive closure violates antisymmetry.
    """
    rel = np.asarray(relation, dtype=bool)
    if rel.ndim != 2 or rel.shape[0] != rel.shape[1]:
        raise UsageError('a relation must be a square matrix')
    n = rel.shape[0]
    if not rel.diagonal().all():
        raise UsageError('a relation must be reflexive')
    closed = rel.copy()
    while True:
        bigger = closed | _bool_product(closed, closed)
        if np.array_equal(bigger, closed):
            break
        closed = bigger
    off_diag_sym = (closed & closed.T) & ~np.eye(n, dtype=bool)
    if off_diag_sym.any():
        i, j = map(int, np.argwhere(off_diag_sym)[0])
        raise InvalidOrderError(f'antisymmetry fails: {i} and {j} are in a cycle')
    return FinitePoset(closed)


class FiniteLattice:
    'A finite lattice: its poset, meet/join tables, and Hasse edges.'

    def __init__(self, poset: FinitePoset, meet: np.ndarray, join: np.ndarray,
                 hasse_edges: list[tuple[int, int]]):
        self.poset = poset
        self.meet = meet
        self.join = join
        self.hasse_edges = hasse_edges

    @property
    def n(self) -> int:
        return self.poset.n

    @cached_property
    def bottom(self) -> int:
        ids = np.flatnonzero(self.poset.leq.all(axis=1))
        if len(ids) != 1:
            raise InternalInvariantError('lattice does not have a unique bottom')
        return int(ids[0])

    @cached_property
    def top(self) -> int:
        ids = np.flatnonzero(self.poset.leq.all(axis=0))
        if len(ids) != 1:
            raise InternalInvariantError('lattice does not have a unique top')
        return int(ids[0])


def to_lattice(poset: FinitePoset) -> FiniteLattice:
    """Compute meet and join tables for a poset, or raise NotALatticeError
    (carrying a witness pair) if some meet or join does not exist.

    The meet of i and j exists iff the intersection of their principal
    ideals is itself a principal ideal, so each ideal is packed into an int
    and intersections are resolved by dictionary lookup; dually for joins.
    """
    n = poset.n
    if n == 0:
        raise NotALatticeError('the empty poset is not a lattice')
    leq = poset.leq
    col_bits = np.packbits(leq, axis=0)
    row_bits = np.packbits(leq, axis=1)
    down = [int.from_bytes(col_bits[:, i].tobytes(), 'big') for i in range(n)]
    up = [int.from_bytes(row_bits[i].tobytes(), 'big') for i in range(n)]
    down_id = {m: i for i, m in enumerate(down)}
    up_id = {m: i for i, m in enumerate(up)}
    if len(down_id) != n or len(up_id) != n:
        raise InternalInvariantError('distinct elements share a principal ideal')

    meet_rows = [[0] * n for _ in range(n)]
    join_rows = [[0] * n for _ in range(n)]
    for i in range(n):
        di, ui = down[i], up[i]
        mrow, jrow = meet_rows[i], join_rows[i]
        for j in range(i, n):
            m = down_id.get(di & down[j])
            if m is None:
                raise NotALatticeError(f'elements {i} and {j} have no meet', witness=(i, j))
            w = up_id.get(ui & up[j])
            if w is None:
                raise NotALatticeError(f'elements {i} and {j} have no join', witness=(i, j))
            mrow[j] = m
            meet_rows[j][i] = m
            jrow[j] = w
            join_rows[j][i] = w
    meet = np.array(meet_rows, dtype=np.int32)
    join = np.array(join_rows, dtype=np.int32)
    lat = FiniteLattice(poset, meet, join, poset.hasse_edges)
    _ = lat.bottom, lat.top
    return lat


def is_modular(lattice: FiniteLattice) -> bool:
    'Check x <= z implies x v (y ^ z) = (x v y) ^ z over all triples.'
    leq = lattice.poset.leq
    meet, join = lattice.meet, lattice.join
    for x in range(lattice.n):
        ups = np.flatnonzero(leq[x])
        jx = join[x]
        lhs = jx[meet[:, ups]]                      # [y, z] -> x v (y ^ z)
        rhs = meet[jx[:, None], ups[None, :]]       # [y, z] -> (x v y) ^ z
        if not np.array_equal(lhs, rhs):
            return False
    return True


def lattice_fingerprint(lattice: FiniteLattice) -> tuple:
    """A cheap isomorphism invariant: size, rank multiset, and per-rank
    multisets of (lower-cover count, upper-cover count).

    Unequal fingerprints prove non-isomorphism; equal ones decide nothing.
    """
    p = lattice.poset
    ranks = p.ranks
    by_rank: dict[int, list[tuple[int, int]]] = {}
    for i in range(p.n):
        by_rank.setdefault(ranks[i], []).append(
            (len(p.lower_covers[i]), len(p.upper_covers[i])))
    rank_counts = tuple(sorted(Counter(ranks).items()))
    degrees = tuple((r, tuple(sorted(v))) for r, v in sorted(by_rank.items()))
    return (p.n, rank_counts, degrees)


def _seed_invariants(lattice: FiniteLattice) -> list[tuple]:
    p = lattice.poset
    down_sizes = p.leq.sum(axis=0)
    up_sizes = p.leq.sum(axis=1)
    return [
        (p.ranks[i], int(down_sizes[i]), int(up_sizes[i]),
         len(p.lower_covers[i]), len(p.upper_covers[i]))
        for i in range(p.n)
    ]


def _refined_classes(l1: FiniteLattice, l2: FiniteLattice) -> tuple[list[int], list[int]]:
    """Jointly refine element invariants of both lattices by repeatedly
    hashing each element together with the classes of its Hasse neighbours,
    until the partition stops splitting.  Class labels are comparable
    across the two lattices.
    """
    inv1, inv2 = _seed_invariants(l1), _seed_invariants(l2)
    p1, p2 = l1.poset, l2.poset
    n_classes = -1
    while True:
        labels = {key: c for c, key in enumerate(sorted(set(inv1) | set(inv2)))}
        c1 = [labels[key] for key in inv1]
        c2 = [labels[key] for key in inv2]
        if len(labels) == n_classes:
            return c1, c2
        n_classes = len(labels)
        inv1 = [
            (c1[i],
             tuple(sorted(c1[j] for j in p1.lower_covers[i])),
             tuple(sorted(c1[j] for j in p1.upper_covers[i])))
            for i in range(p1.n)
        ]
        inv2 = [
            (c2[i],
             tuple(sorted(c2[j] for j in p2.lower_covers[i])),
             tuple(sorted(c2[j] for j in p2.upper_covers[i])))
            for i in range(p2.n)
        ]


class _IsoSearch:
    """Backtracking search for an order isomorphism between two lattices.

    Branches only on refinement classes; once a few elements are placed,
    meets and joins of matched pairs force most of the remaining images,
    so the branch depth stays near the number of join-irreducibles.
    """

    def __init__(self, l1: FiniteLattice, l2: FiniteLattice,
                 c1: list[int], c2: list[int]):
        self.n = l1.n
        self.leq1, self.leq2 = l1.poset.leq, l2.poset.leq
        self.meet1, self.join1 = l1.meet, l1.join
        self.meet2, self.join2 = l2.meet, l2.join
        self.c1, self.c2 = c1, c2
        self.members2: dict[int, list[int]] = {}
        for j, c in enumerate(c2):
            self.members2.setdefault(c, []).append(j)
        self.f = [-1] * self.n
        self.g = [-1] * self.n
        self.matched = np.empty(self.n, dtype=np.int32)
        self.matched_img = np.empty(self.n, dtype=np.int32)
        self.t = 0
        n_classes = 1 + max(c1, default=0)
        self.class_size = [0] * n_classes
        for c in c1:
            self.class_size[c] += 1
        self.class_used = [0] * n_classes

    def run(self) -> list[int] | None:
        limit = 4 * self.n + 1000
        if sys.getrecursionlimit() < limit:
            sys.setrecursionlimit(limit)
        if not self._extend():
            return None
        return list(self.f)

    def _pick(self) -> int:
        best, best_rem = -1, None
        f, c1, size, used = self.f, self.c1, self.class_size, self.class_used
        for i in range(self.n):
            if f[i] < 0:
                c = c1[i]
                rem = size[c] - used[c]
                if best_rem is None or rem < best_rem:
                    best, best_rem = i, rem
                    if rem <= 1:
                        break
        return best

    def _assign(self, i: int, j: int, trail: list[int]) -> bool:
        'Map i to j plus everything it forces; log into trail; False on conflict.'
        f, g = self.f, self.g
        queue = [(i, j)]
        while queue:
            a, b = queue.pop()
            if f[a] >= 0:
                if f[a] != b:
                    return False
                continue
            if g[b] >= 0 or self.c1[a] != self.c2[b]:
                return False
            t = self.t
            m1, m2 = self.matched[:t], self.matched_img[:t]
            if t and not (
                np.array_equal(self.leq1[a, m1], self.leq2[b, m2])
                and np.array_equal(self.leq1[m1, a], self.leq2[m2, b])
            ):
                return False
            f[a] = b
            g[b] = a
            self.matched[t] = a
            self.matched_img[t] = b
            self.t = t + 1
            self.class_used[self.c1[a]] += 1
            trail.append(a)
            ja, ma = self.join1[a].tolist(), self.meet1[a].tolist()
            jb, mb = self.join2[b].tolist(), self.meet2[b].tolist()
            for u, v in zip(self.matched[:t].tolist(), self.matched_img[:t].tolist()):
                z, w = ja[u], jb[v]
                if f[z] < 0 and g[w] < 0:
                    queue.append((z, w))
                elif f[z] != w:
                    return False
                z, w = ma[u], mb[v]
                if f[z] < 0 and g[w] < 0:
                    queue.append((z, w))
                elif f[z] != w:
                    return False
        return True

    def _undo(self, trail: list[int]) -> None:
        for a in reversed(trail):
            b = self.f[a]
            self.f[a] = -1
            self.g[b] = -1
            self.t -= 1
            self.class_used[self.c1[a]] -= 1

    def _extend(self) -> bool:
        if self.t == self.n:
            return True
        i = self._pick()
        for j in self.members2.get(self.c1[i], ()):
            if self.g[j] >= 0:
                continue
            trail: list[int] = []
            if self._assign(i, j, trail) and self._extend():
                return True
            self._undo(trail)
        return False


def find_isomorphism(l1: FiniteLattice, l2: FiniteLattice) -> list[int] | None:
    """An order isomorphism from l1 onto l2 as a list f with f[i] the image
    of i, or None.  Any witness returned has been re-verified in both
    directions against the full relations.
    """
    if l1.n != l2.n:
        return None
    if lattice_fingerprint(l1) != lattice_fingerprint(l2):
        return None
    c1, c2 = _refined_classes(l1, l2)
    if sorted(c1) != sorted(c2):
        return None
    witness = _IsoSearch(l1, l2, c1, c2).run()
    if witness is None:
        return None
    perm = np.array(witness)
    if sorted(witness) != list(range(l1.n)) or not np.array_equal(
            l1.poset.leq, l2.poset.leq[np.ix_(perm, perm)]):
        raise InternalInvariantError('isomorphism witness failed re-verification')
    return witness


def are_isomorphic(l1: FiniteLattice, l2: FiniteLattice) -> bool:
    'Whether two finite lattices are order-isomorphic.'
    return find_isomorphism(l1, l2) is not None
