"""Exact integer arithmetic helpers: gcd folding, factorization, divisors,
and a fraction-free integer determinant.

Everything here works on plain Python ints, so there is no overflow to
worry about; the determinant routine in particular must stay exact because
the divisibility tests built on top of it are meaningless under rounding.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import reduce
from typing import Iterable, Sequence

from .errors import UsageError


def gcd_many(values: Iterable[int]) -> int:
    'Greatest common divisor of one or more integers (gcd of all zeros is 0).'
    vals = list(values)
    if not vals:
        raise UsageError('gcd_many needs at least one integer')
    for v in vals:
        if not isinstance(v, int):
            raise UsageError(f'gcd_many expects integers, got {v!r}')
    return reduce(math.gcd, vals)


@dataclass(frozen=True)
class Factorization:
    'Prime factorization of a positive integer, primes ascending.'

    value: int
    factors: tuple[tuple[int, int], ...]  # (prime, exponent) pairs

    def exponent(self, p: int) -> int:
        for q, e in self.factors:
            if q == p:
                return e
        return 0

    @property
    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def factorize(n: int) -> Factorization:
    """Trial-division factorization of n >= 1.

    Intended for desk-scale inputs (the group orders in play here are
    small); simplicity and verifiability beat speed.
    """
    if not isinstance(n, int) or n < 1:
        raise UsageError(f'factorize expects an integer >= 1, got {n!r}')
    m = n
    factors: list[tuple[int, int]] = []
    p = 2
    while p * p <= m:
        if m % p == 0:
            e = 0
            while m % p == 0:
                m //= p
                e += 1
            factors.append((p, e))
        p += 1 if p == 2 else 2
    if m > 1:
        factors.append((m, 1))
    return Factorization(n, tuple(factors))


def prime_support(n: int) -> tuple[int, ...]:
    'The set of primes dividing n, ascending (empty for n = 1).'
    return factorize(n).primes


def divisors(n: int) -> list[int]:
    'All positive divisors of n >= 1, ascending.'
    fact = factorize(n)
    divs = [1]
    for p, e in fact.factors:
        divs = [d * p**j for d in divs for j in range(e + 1)]
    divs.sort()
    return divs


def det_exact(matrix: Sequence[Sequence[int]]) -> int:
    """Exact determinant of a square integer matrix via fraction-free
    (Bareiss) elimination.

    Every division performed is exact, so the result is correct for
    arbitrary-precision entries.
    """
    n = len(matrix)
    if n == 0:
        raise UsageError('det_exact expects a square matrix of dimension >= 1')
    rows = []
    for row in matrix:
        row = list(row)
        if len(row) != n:
            raise UsageError('det_exact expects a square matrix')
        for x in row:
            if not isinstance(x, int):
                raise UsageError(f'det_exact expects integer entries, got {x!r}')
        rows.append(row)

    sign = 1
    prev = 1
    for k in range(n - 1):
        if rows[k][k] == 0:
            for r in range(k + 1, n):
                if rows[r][k] != 0:
                    rows[k], rows[r] = rows[r], rows[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = rows[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Exact by the Bareiss/Sylvester identity: prev divides this.
                rows[i][j] = (rows[i][j] * pivot - rows[i][k] * rows[k][j]) // prev
            rows[i][k] = 0
        prev = pivot
    return sign * rows[n - 1][n - 1]
