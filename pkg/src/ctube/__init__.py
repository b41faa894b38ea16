"""Exact combinatorics of the cluster tube and type-C cluster patterns."""

from .cluster import (
    ClusterRecord,
    Pattern,
    Seed,
    c_matrix,
    denominator_vector,
    enumerate_pattern,
    g_vector,
    initial_seed,
    mutate_matrix,
    mutate_seed,
    specialize_coefficients,
)
from .errors import *  # noqa: F401,F403
from .intmat import IntMatrix
from .laurent import LaurentPoly
from .rep_oracle import NilpotentRep, build_rep, hom_dim_oracle
from .rigid import (
    ExchangeData,
    MaximalRigid,
    b_matrix,
    check_compatibility,
    enum_maximal_rigids,
    enum_rigid_indecs,
    exchange_triangles,
    mutate_rigid,
    quiver_arrows,
)
from .suites import Report, run_suite
from .tau_tilt import (
    cartan_via_duality,
    f_dim_vector,
    g_c_d_matrices,
    index,
    positive_c_vectors,
    rank_vector,
)
from .tube import (
    ZERO,
    Indec,
    TubeObject,
    ext1_dim,
    hom_cluster_dim,
    hom_tube_dim,
    in_wing,
    is_rigid_indec,
    normalize,
    shift,
    shift_inv,
    tau,
    tau_inv,
)

__version__ = "0.1.0"
