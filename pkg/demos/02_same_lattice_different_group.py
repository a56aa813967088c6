# Non-isomorphic groups can share a subgroup lattice.
#
# Z_6 and Z_10 are different groups, yet both subgroup lattices are a
# four-element diamond (trivial, two prime subgroups, whole group).
# An arithmetic test on the invariant factors decides this without
# building anything; we confirm it here against an explicit search
# for a lattice isomorphism.

from abelian_lattices import (
    GroupSignature,
    are_isomorphic,
    build_lattice,
    tuples_equivalent,
)

pairs = [
    ((6,), (10,)),
    ((12,), (18,)),
    ((2, 6), (2, 10)),
    ((4,), (8,)),
    ((2, 12), (2, 18)),
]

for left, right in pairs:
    rep = tuples_equivalent(left, right)
    brute = are_isomorphic(build_lattice(GroupSignature(left)),
                           build_lattice(GroupSignature(right)))
    mark = 'AGREE' if rep.equivalent == brute else 'DISAGREE'
    print(f'Z{list(left)} vs Z{list(right)}')
    print(f'  criterion: {rep.equivalent}  ({rep.detail})')
    if rep.pairing:
        swaps = ', '.join(f'{p}->{q} with exponent {s}' for p, q, s in rep.pairing)
        print(f'  prime replacement: {swaps}')
    print(f'  isomorphism search: {brute}  [{mark}]')
    print()

# the criterion reads prime exponents, not rational ratios: 24 and 36
# have the ratio 24/36 = 2/3 * ... hiding behind shared primes, but
# their lattices have different sizes (8 vs 9 subgroups)
rep = tuples_equivalent((24,), (36,))
print(f'Z[24] vs Z[36]: criterion says {rep.equivalent} ({rep.detail})')
print('lattice sizes:',
      build_lattice(GroupSignature((24,))).poset.n, 'vs',
      build_lattice(GroupSignature((36,))).poset.n)
