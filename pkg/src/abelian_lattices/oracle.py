"""Brute-force subgroup oracle for Z_{d_1} x ... x Z_{d_k}.

Subgroups are enumerated as explicit element sets by a closure fixpoint,
with no shared arithmetic with the matrix model; this is the independent
reference the matrix-side results are validated against.  Sizes are meant
for desk work: group order is capped (default 400).
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from itertools import product

import numpy as np

from . import posets
from .errors import ResourceLimitError, UsageError
from .fundamental import GroupSignature, as_signature

DEFAULT_ORDER_BOUND = 400

GroupElement = tuple[int, ...]


@dataclass(frozen=True)
class SubgroupSet:
    'A subgroup as a sorted tuple of element tuples; validated on creation.'

    signature: GroupSignature
    elements: tuple[GroupElement, ...]

    def __post_init__(self):
        d = self.signature.d
        elems = tuple(sorted(tuple(e) for e in self.elements))
        object.__setattr__(self, 'elements', elems)
        seen = set(elems)
        if len(seen) != len(elems):
            raise UsageError('subgroup elements must be distinct')
        for e in elems:
            if len(e) != len(d) or any(not 0 <= x < m for x, m in zip(e, d)):
                raise UsageError(f'element {e!r} is outside the group')
        if (0,) * len(d) not in seen:
            raise UsageError('a subgroup must contain the identity')
        if self.signature.order % len(elems):
            raise UsageError('subgroup size does not divide the group order')
        for a in elems:
            for b in elems:
                if tuple((x + y) % m for x, y, m in zip(a, b, d)) not in seen:
                    raise UsageError(f'set is not closed: {a} + {b} escapes')

    @property
    def order(self) -> int:
        return len(self.elements)


def _extend(sig: GroupSignature, subgroup: frozenset[GroupElement],
            g: GroupElement) -> frozenset[GroupElement]:
    'Closure of an already-closed set plus one generator, by coset shifts.'
    d = sig.d
    zero = (0,) * len(d)
    out = set(subgroup)
    step = g
    while step != zero:
        out.update(tuple((x + y) % m for x, y, m in zip(e, step, d)) for e in subgroup)
        step = tuple((x + y) % m for x, y, m in zip(step, g, d))
    return frozenset(out)


def closure(sig, generators) -> SubgroupSet:
    'The subgroup generated by the given elements (which must lie in the group).'
    sig = as_signature(sig)
    d = sig.d
    gens = []
    for g in generators:
        g = tuple(g)
        if len(g) != len(d) or any(not isinstance(x, int) or not 0 <= x < m
                                   for x, m in zip(g, d)):
            raise UsageError(f'generator {g!r} is outside the group')
        gens.append(g)
    current = frozenset({(0,) * len(d)})
    for g in gens:
        if g not in current:
            current = _extend(sig, current, g)
    return SubgroupSet(sig, tuple(sorted(current)))


@lru_cache(maxsize=None)
def _all_subgroups(sig: GroupSignature, bound: int) -> tuple[SubgroupSet, ...]:
    if sig.order > bound:
        raise ResourceLimitError(
            f'group order {sig.order} exceeds the oracle bound {bound}')
    universe = [tuple(e) for e in product(*(range(m) for m in sig.d))]
    trivial = frozenset({(0,) * sig.k})
    seen = {trivial}
    queue = [trivial]
    while queue:
        sub = queue.pop()
        for g in universe:
            if g not in sub:
                bigger = _extend(sig, sub, g)
                if bigger not in seen:
                    seen.add(bigger)
                    queue.append(bigger)
    ordered = sorted(seen, key=lambda s: (len(s), sorted(s)))
    return tuple(SubgroupSet(sig, tuple(sorted(s))) for s in ordered)


def all_subgroups(sig, bound: int = DEFAULT_ORDER_BOUND) -> list[SubgroupSet]:
    """Every subgroup, found by repeatedly extending known subgroups by one
    outside element; canonically ordered by (order, element list).

    Any subgroup <g_1, ..., g_t> is reached through the chain of
    one-generator extensions, so the fixpoint is exhaustive.
    """
    return list(_all_subgroups(as_signature(sig), bound))


def inclusion_lattice(subgroups: list[SubgroupSet]) -> posets.FiniteLattice:
    'The lattice of the given subgroups under set inclusion, ids in list order.'
    if not subgroups:
        raise UsageError('inclusion_lattice needs at least one subgroup')
    sig = subgroups[0].signature
    if any(s.signature != sig for s in subgroups):
        raise UsageError('all subgroups must belong to the same group')
    index = {e: i for i, e in enumerate(product(*(range(m) for m in sig.d)))}
    masks = []
    for s in subgroups:
        m = 0
        for e in s.elements:
            m |= 1 << index[e]
        masks.append(m)
    if len(set(masks)) != len(masks):
        raise UsageError('subgroup list contains duplicates')
    n = len(subgroups)
    sizes = [s.order for s in subgroups]
    rel = np.zeros((n, n), dtype=bool)
    for i in range(n):
        mi, szi = masks[i], sizes[i]
        row = rel[i]
        for j in range(n):
            if szi <= sizes[j] and sizes[j] % szi == 0 and mi & masks[j] == mi:
                row[j] = True
    return posets.to_lattice(posets.from_relation(rel))


@lru_cache(maxsize=None)
def _subgroup_lattice(sig: GroupSignature, bound: int):
    subs = _all_subgroups(sig, bound)
    return subs, inclusion_lattice(list(subs))


def subgroup_lattice(sig, bound: int = DEFAULT_ORDER_BOUND) -> posets.FiniteLattice:
    'Cached convenience: the inclusion lattice over all_subgroups(sig).'
    return _subgroup_lattice(as_signature(sig), bound)[1]


def matrix_generated_subgroup(sig, matrix, convention: str = 'rows') -> SubgroupSet:
    """The subgroup generated by the rows (or columns) of a matrix, each
    coordinate read modulo its invariant factor.

    The rows convention is the validated one and the default; 'columns' is
    kept so the choice can be demonstrated rather than asserted.
    """
    sig = as_signature(sig)
    rows = tuple(tuple(r) for r in matrix)
    if len(rows) != sig.k or any(len(r) != sig.k for r in rows):
        raise UsageError(f'expected a {sig.k}x{sig.k} matrix')
    if convention == 'rows':
        vectors = rows
    elif convention == 'columns':
        vectors = tuple(zip(*rows))
    else:
        raise UsageError("convention must be 'rows' or 'columns'")
    gens = [tuple(x % m for x, m in zip(v, sig.d)) for v in vectors]
    return closure(sig, gens)
