import pytest

from abelian_lattices.errors import UsageError
from abelian_lattices.fundamental import (
    GroupSignature,
    as_signature,
    build_lattice,
    enumerate_lattice,
    is_member,
    leq,
    matrix_from_text,
    matrix_to_text,
)
from abelian_lattices.oracle import all_subgroups, matrix_generated_subgroup
from abelian_lattices.posets import is_modular


def test_signature_validation():
    GroupSignature((2, 4, 8))
    with pytest.raises(UsageError):
        GroupSignature(())
    with pytest.raises(UsageError):
        GroupSignature((1, 2))
    with pytest.raises(UsageError):
        GroupSignature((4, 2))  # 4 does not divide 2
    with pytest.raises(UsageError):
        GroupSignature((2, 3))  # not a divisor chain


def test_as_signature_accepts_lists():
    assert as_signature([2, 4]).d == (2, 4)
    assert as_signature(GroupSignature((2,))).d == (2,)


def test_matrix_text_roundtrip():
    m = matrix_from_text('1,1;0,2')
    assert m == ((1, 1), (0, 2))
    assert matrix_to_text(m) == '1,1;0,2'
    with pytest.raises(UsageError):
        matrix_from_text('a,b')
    # ragged text parses, but the membership check rejects the shape
    ragged = matrix_from_text('1,1;0')
    with pytest.raises(UsageError):
        is_member(GroupSignature((2, 2)), ragged)


def test_membership_square_two():
    sig = GroupSignature((2, 2))
    members = [m.matrix for m in enumerate_lattice(sig)]
    assert ((1, 0), (0, 1)) in members
    assert ((1, 1), (0, 2)) in members
    assert ((2, 0), (0, 2)) in members
    assert len(members) == 5
    # below diagonal must be zero
    assert not is_member(sig, ((1, 0), (1, 1)))
    # off-diagonal entry must stay below its column diagonal
    assert not is_member(sig, ((1, 2), (0, 2)))
    # diagonal must divide the group exponents
    assert not is_member(sig, ((3, 0), (0, 1)))


def test_membership_divisibility_condition():
    sig = GroupSignature((2, 4))
    # fails because 4 does not divide 2*1/1
    assert not is_member(sig, ((1, 1), (0, 4)))
    assert is_member(sig, ((1, 1), (0, 2)))
    assert is_member(sig, ((1, 2), (0, 4)))
    assert not is_member(sig, ((1, 3), (0, 4)))


def test_enumerate_two_four_exactly():
    got = [matrix_to_text(e.matrix) for e in enumerate_lattice(GroupSignature((2, 4)))]
    assert got == [
        '1,0;0,1', '1,0;0,2', '1,0;0,4', '1,1;0,2',
        '1,2;0,4', '2,0;0,1', '2,0;0,2', '2,0;0,4',
    ]


def test_enumerate_counts_match_divisor_function():
    # cyclic group: members correspond to divisors of d
    for d, tau in [(2, 2), (6, 4), (12, 6), (36, 9), (360, 24)]:
        assert len(enumerate_lattice(GroupSignature((d,)))) == tau


def test_enumerate_known_counts():
    for d, count in [((2, 2), 5), ((2, 4), 8), ((2, 2, 2), 16),
                     ((3, 3), 6), ((6, 6), 30), ((10, 10), 40)]:
        assert len(enumerate_lattice(GroupSignature(d))) == count


def test_subgroup_order_formula():
    # order = product of d_i over product of diagonal entries
    for d in [(2, 4), (6, 6), (2, 4, 8)]:
        sig = GroupSignature(d)
        for e in enumerate_lattice(sig):
            diag = 1
            for i in range(sig.k):
                diag *= e.matrix[i][i]
            assert e.subgroup_order * diag == sig.order


def test_leq_examples():
    sig = GroupSignature((2, 4))
    I = matrix_from_text('1,0;0,1')
    A = matrix_from_text('1,1;0,2')
    B = matrix_from_text('2,0;0,2')
    D = matrix_from_text('2,0;0,4')
    assert leq(sig, A, I)
    assert leq(sig, B, A)  # {(0,0),(0,2)} sits inside the subgroup of A
    assert not leq(sig, A, B)
    assert not leq(sig, I, A)
    for e in enumerate_lattice(sig):
        assert leq(sig, e.matrix, I)
        assert leq(sig, D, e.matrix)


def test_leq_requires_membership():
    sig = GroupSignature((2, 4))
    with pytest.raises(UsageError):
        leq(sig, ((1, 3), (0, 4)), ((1, 0), (0, 1)))
    with pytest.raises(UsageError):
        leq(sig, ((1, 0), (0, 1)), ((1, 3), (0, 4)))


def test_order_matches_subgroup_inclusion():
    # the relation on matrices must agree with set inclusion of the
    # subgroups their rows generate
    for d in [(2, 4), (3, 9), (2, 2, 2), (4, 8)]:
        sig = GroupSignature(d)
        elems = enumerate_lattice(sig)
        gen = {e.id: set(matrix_generated_subgroup(sig, e.matrix, 'rows').elements)
               for e in elems}
        for a in elems:
            for b in elems:
                assert leq(sig, a.matrix, b.matrix) == (gen[a.id] <= gen[b.id])


def test_row_reading_is_the_faithful_one():
    # reading rows as generators maps matrices onto subgroups one-to-one;
    # reading columns collapses distinct members already on Z_2 x Z_2
    sig = GroupSignature((2, 2))
    elems = enumerate_lattice(sig)
    rows = {matrix_generated_subgroup(sig, e.matrix, 'rows') for e in elems}
    cols = {matrix_generated_subgroup(sig, e.matrix, 'columns') for e in elems}
    assert len(rows) == len(elems)
    assert rows == set(all_subgroups(sig))
    assert len(cols) < len(elems)


def test_build_lattice_structure():
    lat = build_lattice(GroupSignature((2, 2)))
    assert lat.poset.n == 5
    # three atoms over the bottom, all meeting at top
    assert len(lat.hasse_edges) == 6
    assert is_modular(lat)


def test_build_lattice_is_cached():
    a = build_lattice(GroupSignature((6, 6)))
    b = build_lattice(GroupSignature((6, 6)))
    assert a is b


def test_matrix_generated_subgroup_rejects_bad_convention():
    sig = GroupSignature((2, 2))
    with pytest.raises(UsageError):
        matrix_generated_subgroup(sig, ((1, 0), (0, 1)), 'diagonal')
