"""Entanglement families of permutation-symmetric qubit states.

The family label is the minimal bond dimension D of a diagonal,
site-independent matrix product state for the state. The package also
builds explicit decompositions and Kraus matrices, and constructs parent
Hamiltonians from reduced density matrices.
"""
from .config import ToleranceConfig
from .decomposer import (
    DiagonalDecomposition,
    IllConditionedError,
    KrausPair,
    MajoranaRoots,
    decompose,
    extend_nesting,
    kraus_pair,
    majorana_roots,
    moments,
    optimal_bond_dimension,
    pairwise_independent,
    schmidt_binary_rank,
)
from .hamiltonian import (
    NoKernelError,
    ParentHamiltonian,
    assemble_parent,
    bipartition_map,
    dicke_projector,
    kernel_projector,
    paper_hamiltonian,
    rank_profile,
    reduced_density,
    verify_ground,
)
from .slocc import ILO, apply_ilo, random_ilo, symmetric_power_rep
from .symstate import (
    ProductPoint,
    SymmetricState,
    ZeroStateError,
    build_named,
    from_decomposition,
    overlap,
    to_full_vector,
)

__version__ = "0.1.0"

__all__ = [
    "apply_ilo",
    "assemble_parent",
    "bipartition_map",
    "build_named",
    "decompose",
    "DiagonalDecomposition",
    "dicke_projector",
    "extend_nesting",
    "from_decomposition",
    "IllConditionedError",
    "ILO",
    "kernel_projector",
    "kraus_pair",
    "KrausPair",
    "majorana_roots",
    "MajoranaRoots",
    "moments",
    "NoKernelError",
    "optimal_bond_dimension",
    "overlap",
    "pairwise_independent",
    "paper_hamiltonian",
    "ParentHamiltonian",
    "ProductPoint",
    "random_ilo",
    "rank_profile",
    "reduced_density",
    "schmidt_binary_rank",
    "symmetric_power_rep",
    "SymmetricState",
    "to_full_vector",
    "ToleranceConfig",
    "verify_ground",
    "ZeroStateError",
]
