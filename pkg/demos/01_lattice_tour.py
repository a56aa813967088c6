# Tour of one subgroup lattice, start to finish.
#
# Every subgroup of Z_2 x Z_4 is the row space (mod the group) of exactly
# one upper-triangular integer matrix satisfying three divisibility
# conditions. We list those matrices, read off the subgroup orders, and
# print the covering relations.

from abelian_lattices import (
    GroupSignature,
    build_lattice,
    enumerate_lattice,
    leq,
    matrix_to_text,
)

sig = GroupSignature((2, 4))
members = enumerate_lattice(sig)

print(f'Z_2 x Z_4 has {len(members)} subgroups:')
for m in members:
    print(f'  [{m.id}] {matrix_to_text(m.matrix)}  subgroup order {m.subgroup_order}')

# the identity matrix is the whole group, the diagonal of (2, 4) the
# trivial subgroup; everything sits between them
top = members[0].matrix
bottom = members[-1].matrix
print('\nidentity matrix is above every member:',
      all(leq(sig, m.matrix, top) for m in members))
print('diag(2,4) is below every member:',
      all(leq(sig, bottom, m.matrix) for m in members))

# covering edges, smaller subgroup -> larger subgroup
lat = build_lattice(sig)
print(f'\n{len(lat.hasse_edges)} covering edges:')
for lo, hi in lat.hasse_edges:
    print(f'  {matrix_to_text(members[lo].matrix)}  <:  {matrix_to_text(members[hi].matrix)}')

# meets and joins come with the lattice; sample one incomparable pair
a = next(m.id for m in members if matrix_to_text(m.matrix) == '1,1;0,2')
b = next(m.id for m in members if matrix_to_text(m.matrix) == '1,0;0,2')
w = lat.meet[a, b]
v = lat.join[a, b]
print(f'\nmeet of {matrix_to_text(members[a].matrix)} and '
      f'{matrix_to_text(members[b].matrix)} is {matrix_to_text(members[w].matrix)}')
print(f'join of the same pair is {matrix_to_text(members[v].matrix)}')
