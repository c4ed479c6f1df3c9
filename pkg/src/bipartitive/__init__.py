"""Exact HL-bipartitions of matrices, splits and bi-joins, and bipartitive families.

The most used names are re-exported here; see the submodules for the rest.
"""

from .errors import AxiomError, InternalInconsistency, NotIrreducibleError
from .families import (
    AxiomReport,
    Bipartition,
    BipartitionFamily,
    SetFamily,
    check_bipartitive,
    check_partitive,
    check_weakly_bipartitive,
    make_bipartition,
    overlaps,
    rao_lift,
    rao_reduce,
)
from .field import RATIONALS, Mod, PrimeField, make_rational
from .graphs import (
    Graph,
    Tournament,
    adjacency_matrix,
    bijoins_graph,
    bijoins_tournament,
    seidel_matrix_graph,
    seidel_matrix_tournament,
    split_witness,
    splits,
)
from .hl import (
    hl_family,
    hl_via_clans,
    inverse_block_rank_check,
    is_hl_bipartition,
    normalize,
    verify_forward,
)
from .l2 import L2Structure, clans, induce, is_clan, l2_from_matrix, matrix_from_l2
from .matrix import ExactMatrix, SingularMatrixError
from .realization import assign_labels, build_tree, realize, strong_members

__version__ = "0.1.0"
