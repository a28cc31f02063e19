"""Exact census of k-ary operations on finite sets up to isomorphism."""

from .arith import (
    CycleType,
    Perm,
    all_perms,
    cycle_type_count,
    cycle_type_of,
    divisors,
    enumerate_cycle_types,
    gcd_list,
    lcm_list,
    realize_cycle_type,
)
from .census import (
    CensusQuery,
    CensusResult,
    GuardError,
    VARIANT_CORRECT,
    VARIANT_HARRISON,
    count_k_magmas,
    count_via_cycle_index,
    count_via_permutation_sum,
    fixed_point_count,
    fixed_point_count_harrison,
    sequence,
    weighted_divisor_sum,
)
from .cycle_index import (
    CycleIndexPoly,
    Monomial,
    cycle_index_direct,
    cycle_index_recursive,
    induce,
    max_indeterminate_index,
    substitute_per_monomial,
)
from .oracle import (
    EnumerationCapError,
    OpTable,
    act,
    all_tables,
    canonical_form,
    cell_permutation,
    count_orbits_bruteforce,
    fixed_tables_structural,
    is_automorphism,
    orbit_stabilizer_check,
)

__version__ = "0.1.0"
