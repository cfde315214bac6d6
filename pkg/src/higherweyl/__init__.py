"""Exact dimensions, characters and bases of level-k Schubert modules for gl_r."""

from .characters import (
    GradedCharacter,
    char_chain_model,
    char_matrix_model,
    cpf_dim,
    decompose_module,
    graded_char,
)
from .enumeration import (
    BasisMatrix,
    PlanePartition,
    chain_of_matrix,
    count_basis_matrices,
    count_plane_partitions,
    enumerate_basis_matrices,
    enumerate_plane_partitions,
    matrix_to_pp,
    pp_to_matrix,
)
from .partitions import (
    ExtremalIndex,
    Partition,
    PartitionChain,
    contains,
    enumerate_chains,
    eta_of_xi,
    lambda_of_eta,
    transpose,
)
from .symfunc import (
    SymPolynomial,
    expand_in_schur,
    lr_coefficients,
    outer_dim,
    schur,
    skew_schur,
    skew_syt_count,
    weyl_dim_gl,
)
from .weyl_dims import (
    FundamentalWeightVector,
    demazure_dim_gl,
    det_exact,
    higher_catalan,
    hodge_det_dim,
    product_dim_rect,
    product_dim_trapezoid,
)

__version__ = "0.1.0"
