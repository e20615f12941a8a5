"""3-tuple total domination number of rook's graphs Kn x Km.

Closed forms, explicit minimum dominating sets as (0,1)-matrices, and an
exact branch-and-bound oracle to check both.
"""

from .construct import (
    CATALOG,
    CatalogEntry,
    Decomposition,
    Kind,
    build_component,
    construct_last_k_columns,
    construct_min_3tds,
    decompose_counts,
)
from .formats import MatrixParseError, parse_matrix_text, render_matrix
from .gamma import (
    GammaResult,
    Regime,
    gamma_3t,
    gamma_3t_square,
    lower_bound_2n2,
    remark_bound,
    residue_k,
    simple_upper_kn,
    three_n_threshold,
)
from .matrix import (
    BitMatrix,
    ComponentReport,
    components,
    compose_block_diagonal,
    is_ktds,
    kappa,
    line_sums,
    ones_count,
    permute,
)
from .solver import SolveReport, SolverConfig, Status, solve_min_ktds

__version__ = "0.1.0"
