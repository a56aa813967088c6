# Searching for power families that collide.
#
# If L(G^m_i) ~ L(H^n_i) for every index and the exponent lists have
# equal gcd, the groups must be isomorphic. Drop the gcd condition and
# counterexamples appear: the explorer looks for pairs of distinct
# groups whose listed powers all share a lattice.

from abelian_lattices import GroupSignature, explore_open_problem, power_signature

findings = explore_open_problem(max_order=8, max_exp=3)

print(f'{len(findings)} finding(s) with order <= 8 and exponents <= 3\n')
for f in findings:
    print(f'G = Z{f["left"]}, H = Z{f["right"]}, m = {f["m"]}, n = {f["n"]} '
          f'(gcds {f["gcd_m"]} vs {f["gcd_n"]})')
    for (mi, ni), (lp, rp) in zip(zip(f['m'], f['n']), f['powers']):
        print(f'  G^{mi} has signature {lp}')
        print(f'  H^{ni} has signature {rp}')

# the smallest witness in words: (Z_2 x Z_2)^3 and (Z_2 x Z_2 x Z_2)^2
# are literally the same group Z_2^6, so of course the lattices agree,
# yet gcd(3) != gcd(2) and the base groups differ
a = power_signature(GroupSignature((2, 2)), 3)
b = power_signature(GroupSignature((2, 2, 2)), 2)
print('\npower signatures coincide:', a == b, '->', list(a.d))
