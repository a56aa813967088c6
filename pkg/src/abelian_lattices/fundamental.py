"""Upper-triangular matrix model of the subgroup lattice of a finite
abelian group.

A group is given by its invariant-factor signature d_1 | d_2 | ... | d_k
(all d_i >= 2).  The subgroups of Z_{d_1} x ... x Z_{d_k} correspond one to
one with the k x k integer matrices A = (a_ij) such that

  I.   a_ij = 0 below the diagonal;
  II.  a_jj >= 1 and 0 <= a_ij < a_jj above the diagonal;
  III. column by column, a_jj divides d_j and, for each i < j, the integer
       d_i * det(R(i, j)) / (a_ii * ... * a_{j-1,j-1}),
       where R(i, j) is the submatrix of A on rows i..j-1 and columns
       i+1..j (1-based; the j = 1 instance is just a_11 | d_1).

The rows of a member matrix, read modulo the d_i, generate the matching
subgroup of order (prod d_i) / (prod a_ii); the identity matrix is the
whole group and diag(d_1, ..., d_k) is the trivial subgroup.  Once the
conditions for the columns left of j hold, the quotients in III are
provably integral, so a non-integral quotient is raised as an internal
error rather than reported as a membership failure.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product
from math import prod

import numpy as np

from . import posets
from .arith import det_exact, divisors
from .errors import (
    InternalInvariantError,
    InvalidOrderError,
    NotALatticeError,
    UsageError,
)

Matrix = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class GroupSignature:
    'Invariant-factor chain d_1 | d_2 | ... | d_k with every d_i >= 2.'

    d: tuple[int, ...]

    def __post_init__(self):
        d = tuple(self.d)
        object.__setattr__(self, 'd', d)
        if not d:
            raise UsageError('a signature needs at least one invariant factor')
        for x in d:
            if not isinstance(x, int) or isinstance(x, bool) or x < 2:
                raise UsageError(f'invariant factors must be integers >= 2, got {x!r}')
        for a, b in zip(d, d[1:]):
            if b % a:
                raise UsageError(f'invariant factors must form a divisibility chain: {a} does not divide {b}')

    @property
    def k(self) -> int:
        return len(self.d)

    @property
    def order(self) -> int:
        return prod(self.d)


@dataclass(frozen=True)
class LatticeElement:
    'One member matrix together with its id and the order of its subgroup.'

    id: int
    matrix: Matrix
    subgroup_order: int


def as_signature(value) -> GroupSignature:
    'Coerce a GroupSignature or an iterable of ints into a GroupSignature.'
    if isinstance(value, GroupSignature):
        return value
    return GroupSignature(tuple(value))


def matrix_from_text(text: str) -> Matrix:
    "Parse the row format '1,1;0,2' (rows split on ';', entries on ',')."
    try:
        return tuple(
            tuple(int(entry.strip()) for entry in row.strip().split(','))
            for row in text.strip().split(';')
        )
    except ValueError as e:
        raise UsageError(f'cannot parse matrix text {text!r}') from e


def matrix_to_text(matrix: Matrix) -> str:
    return ';'.join(','.join(str(x) for x in row) for row in matrix)


def _matrix_rows(sig: GroupSignature, matrix) -> Matrix:
    rows = tuple(tuple(r) for r in matrix)
    if len(rows) != sig.k or any(len(r) != sig.k for r in rows):
        raise UsageError(f'expected a {sig.k}x{sig.k} matrix')
    for row in rows:
        for x in row:
            if not isinstance(x, int) or isinstance(x, bool):
                raise UsageError(f'matrix entries must be integers, got {x!r}')
    return rows


def _det(m) -> int:
    'Exact determinant, with short paths for the tiny orders that dominate.'
    s = len(m)
    if s == 1:
        return m[0][0]
    if s == 2:
        return m[0][0] * m[1][1] - m[0][1] * m[1][0]
    if s == 3:
        (a, b, c), (d, e, f), (g, h, i) = m
        return a * (e * i - f * h) - b * (d * i - f * g) + c * (d * h - e * g)
    return det_exact([list(row) for row in m])


def _column_condition(d: tuple[int, ...], rows, j: int) -> bool:
    """Condition III for column j, assuming earlier columns already passed.

    Evaluated for i = j-1 down to 0, so the cheap low-order minors reject
    first.  A non-integral quotient here contradicts the cascade guarantee
    and is an internal error.
    """
    ajj = rows[j][j]
    if d[j] % ajj:
        return False
    den = 1
    for i in range(j - 1, -1, -1):
        den *= rows[i][i]
        sub = [row[i + 1: j + 1] for row in rows[i:j]]
        q, rem = divmod(d[i] * _det(sub), den)
        if rem:
            raise InternalInvariantError(
                f'membership quotient for column {j + 1}, row {i + 1} is not integral')
        if q % ajj:
            return False
    return True


def is_member(sig, matrix) -> bool:
    """Whether matrix satisfies conditions I-III for the signature.

    Shape or type problems raise UsageError; every arithmetic failure,
    including a non-positive diagonal, simply returns False.
    """
    sig = as_signature(sig)
    rows = _matrix_rows(sig, matrix)
    k = sig.k
    for i in range(k):
        for j in range(i):
            if rows[i][j] != 0:
                return False
    for j in range(k):
        if rows[j][j] < 1:
            return False
        for i in range(j):
            if not 0 <= rows[i][j] < rows[j][j]:
                return False
    return all(_column_condition(sig.d, rows, j) for j in range(k))


@lru_cache(maxsize=None)
def _enumerate(sig: GroupSignature) -> tuple[LatticeElement, ...]:
    d, k = sig.d, sig.k
    work = [[0] * k for _ in range(k)]
    found: list[Matrix] = []

    def fill(j: int) -> None:
        if j == k:
            found.append(tuple(tuple(row) for row in work))
            return
        for ajj in divisors(d[j]):
            work[j][j] = ajj
            for above in product(range(ajj), repeat=j):
                for i in range(j):
                    work[i][j] = above[i]
                if _column_condition(d, work, j):
                    fill(j + 1)

    fill(0)
    found.sort()
    order = sig.order
    return tuple(
        LatticeElement(i, m, order // prod(m[t][t] for t in range(k)))
        for i, m in enumerate(found)
    )


def enumerate_lattice(sig) -> list[LatticeElement]:
    """All member matrices for the signature, sorted ascending by row-major
    entry list; ids match list positions.

    Column-by-column search: condition III for column j only reads columns
    up to j, so failing prefixes are pruned exactly, and any passing prefix
    extends (identity columns always satisfy later conditions).
    """
    return list(_enumerate(as_signature(sig)))


def _leq_dets(a: Matrix, b: Matrix, k: int) -> bool:
    'Bordered-minor conditions of leq, diagonals assumed already checked.'
    for j in range(k):
        bjj = b[j][j]
        if bjj == 1:
            continue
        den = 1
        for i in range(j - 1, -1, -1):
            den *= b[i][i]
            mat = [a[i][i: j + 1]]
            mat.extend(b[r][i: j + 1] for r in range(i, j))
            q, rem = divmod(_det(mat), den)
            if rem:
                raise InternalInvariantError(
                    f'order quotient for column {j + 1}, row {i + 1} is not integral')
            if q % bjj:
                return False
    return True


def leq(sig, left, right) -> bool:
    """Whether left <= right in the lattice (left's subgroup inside right's).

    For each column j, b_jj must divide a_jj and, for each i < j, the
    integer E(i, j) / (b_ii * ... * b_{j-1,j-1}), where E(i, j) is the
    determinant of the square matrix whose first row is (a_ii, ..., a_ij)
    and whose remaining rows are rows i..j-1 of right on columns i..j.
    Both arguments must be members; anything else is a usage error.
    """
    sig = as_signature(sig)
    a = _matrix_rows(sig, left)
    b = _matrix_rows(sig, right)
    if not is_member(sig, a):
        raise UsageError('left matrix is not a member for this signature')
    if not is_member(sig, b):
        raise UsageError('right matrix is not a member for this signature')
    if any(a[j][j] % b[j][j] for j in range(sig.k)):
        return False
    return _leq_dets(a, b, sig.k)


@lru_cache(maxsize=None)
def _build_lattice(sig: GroupSignature) -> posets.FiniteLattice:
    elements = _enumerate(sig)
    n = len(elements)
    k = sig.k
    rows = [e.matrix for e in elements]
    rel = np.eye(n, dtype=bool)

    by_diag: dict[tuple[int, ...], list[int]] = {}
    for e in elements:
        by_diag.setdefault(tuple(e.matrix[t][t] for t in range(k)), []).append(e.id)

    # A <= B needs every b_jj | a_jj, so whole diagonal blocks drop out early.
    for da, ids_a in by_diag.items():
        for db, ids_b in by_diag.items():
            if any(x % y for x, y in zip(da, db)):
                continue
            for ia in ids_a:
                ra = rows[ia]
                rel_row = rel[ia]
                for ib in ids_b:
                    if ia != ib and _leq_dets(ra, rows[ib], k):
                        rel_row[ib] = True

    try:
        poset = posets.from_relation(rel)
        if not np.array_equal(poset.leq, rel):
            raise InternalInvariantError('member order relation is not transitive')
        lattice = posets.to_lattice(poset)
    except (InvalidOrderError, NotALatticeError) as e:
        raise InternalInvariantError(f'member order relation is not a lattice: {e}') from e
    if not posets.is_modular(lattice):
        raise InternalInvariantError('member lattice is not modular')
    return lattice


def build_lattice(sig) -> posets.FiniteLattice:
    """The full lattice over enumerate_lattice(sig): order relation from
    leq, Hasse edges, meet/join tables.  Lattice axioms and modularity are
    asserted; their failure would be an internal error, not bad input.

    Results are cached per signature and shared, so treat them as
    read-only.
    """
    return _build_lattice(as_signature(sig))
