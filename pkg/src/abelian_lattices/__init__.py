"""Subgroup lattices of finite abelian groups, modeled by integer matrices.

A finite abelian group Z_{d_1} x ... x Z_{d_k} with d_1 | d_2 | ... | d_k
has its subgroups in bijection with a family of upper-triangular integer
matrices; divisibility conditions on the entries decide membership and
the lattice order.  This package enumerates those matrices, builds the
lattice, checks it against a brute-force subgroup oracle, and decides
when two groups have isomorphic subgroup lattices without building
anything.
"""

from .arith import Factorization, det_exact, divisors, factorize, gcd_many, prime_support
from .equivalence import (
    EquivalenceReport,
    TheoremReport,
    explore_open_problem,
    is_lattice_determined,
    lattices_isomorphic,
    pairing_by_search,
    power_signature,
    ratio_condition_literal,
    signatures_up_to,
    tuples_equivalent,
    verify_theorem_1,
    verify_theorem_2,
    verify_theorem_3,
    verify_theorem_a,
    verify_theorem_b,
)
from .errors import (
    InternalInvariantError,
    InvalidOrderError,
    NotALatticeError,
    ResourceLimitError,
    UsageError,
)
from .fundamental import (
    GroupSignature,
    LatticeElement,
    as_signature,
    build_lattice,
    enumerate_lattice,
    is_member,
    leq,
    matrix_from_text,
    matrix_to_text,
)
from .oracle import (
    DEFAULT_ORDER_BOUND,
    SubgroupSet,
    all_subgroups,
    closure,
    inclusion_lattice,
    matrix_generated_subgroup,
    subgroup_lattice,
)
from .posets import (
    FiniteLattice,
    FinitePoset,
    are_isomorphic,
    find_isomorphism,
    from_relation,
    is_modular,
    lattice_fingerprint,
    to_lattice,
)

__version__ = '0.1.0'

__all__ = [
    'DEFAULT_ORDER_BOUND',
    'EquivalenceReport',
    'Factorization',
    'FiniteLattice',
    'FinitePoset',
    'GroupSignature',
    'InternalInvariantError',
    'InvalidOrderError',
    'LatticeElement',
    'NotALatticeError',
    'ResourceLimitError',
    'SubgroupSet',
    'TheoremReport',
    'UsageError',
    'all_subgroups',
    'are_isomorphic',
    'as_signature',
    'build_lattice',
    'closure',
    'det_exact',
    'divisors',
    'enumerate_lattice',
    'explore_open_problem',
    'factorize',
    'find_isomorphism',
    'from_relation',
    'gcd_many',
    'inclusion_lattice',
    'is_lattice_determined',
    'is_member',
    'is_modular',
    'lattice_fingerprint',
    'lattices_isomorphic',
    'leq',
    'matrix_from_text',
    'matrix_generated_subgroup',
    'matrix_to_text',
    'pairing_by_search',
    'power_signature',
    'ratio_condition_literal',
    'signatures_up_to',
    'subgroup_lattice',
    'to_lattice',
    'tuples_equivalent',
    'verify_theorem_1',
    'verify_theorem_2',
    'verify_theorem_3',
    'verify_theorem_a',
    'verify_theorem_b',
]
