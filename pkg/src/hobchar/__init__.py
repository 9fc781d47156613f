"""Exact character tables and branching matrices for symmetric and
signed-permutation (hyperoctahedral) groups.

All results are exact integers or rationals; every table is cross-checked
by orthogonality relations, a consistency identity between the two
branching routes, and (at small rank) a brute-force oracle over explicitly
enumerated group elements.
"""

from hobchar._backend import BACKEND
from hobchar.chains import (
    chain_compose,
    hob_chain,
    hob_restriction_matrix,
    method_b_verify,
    sym_chain,
    weyl_matrix,
)
from hobchar.combinatorics import (
    CellMatrix,
    Partition,
    enumerate_cell_matrices,
    even_partition_count,
    partitions,
    sign_flag_vectors,
)
from hobchar.embedding import (
    FusionMap,
    fuse_class,
    fusion_map,
    intersection_orders,
    modified_tables,
    modify_table,
    permutation_character_F,
)
from hobchar.hyperoct import (
    AlphaSystem,
    SignedSubgroupLabel,
    hob_classes,
    hob_induced_char,
    hob_induced_table,
    hob_irreducible_table,
    hob_subgroups,
    hob_weights,
)
from hobchar.reduction import (
    BranchingMatrix,
    reduce_induced,
    reduce_irreducible,
    verify_consistency,
)
from hobchar.reports import CheckReport
from hobchar.symmetric import (
    CycleType,
    sym_classes,
    sym_induced_char,
    sym_induced_table,
    sym_irreducible_table,
    sym_weights,
)
from hobchar.tables import (
    CharacterTable,
    ExactnessError,
    TransitionMatrix,
    WeightVector,
    weighted_gram_schmidt,
)

__version__ = "0.1.0"


def clear_caches() -> None:
    """Drop all memoized tables (useful before timing runs)."""
    from hobchar import combinatorics, hyperoct as _h, oracle as _o, symmetric as _s

    for fn in (
        combinatorics.partitions,
        _s.sym_classes,
        _s.sym_induced_table,
        _s.sym_irreducible_table,
        _h.hob_subgroups,
        _h.hob_classes,
        _h.hob_induced_table,
        _h.hob_irreducible_table,
        _o.enumerate_group,
        _o.oracle_class_data,
    ):
        fn.cache_clear()
