"""General Entanglement for pure multipartite states of arbitrary local dimension."""

from genent.errors import (
    DegenerateInputError,
    GenentError,
    InvalidArgumentError,
    InvariantViolationError,
    ResourceLimitError,
)
from genent.tensor import (
    MultipartiteState,
    apply_local_unitaries,
    basis_state,
    haar_random_unitary,
    merge_bipartition,
    permute_subsystems,
    product_state,
    purity,
    random_pure_state,
    reduced_density,
    tensor_product,
)
from genent.basis import (
    HermitianBasis,
    expansion_coefficients,
    gell_mann_basis,
    gram_schmidt_orthonormalize,
    spin_half_basis,
    spin_one_basis,
    verify_basis,
)
from genent.measure import (
    GEReport,
    SubsystemEntanglement,
    bipartitions,
    concurrence_two_qubit,
    epsilon_subsystem,
    ge_from_purities,
    general_entanglement,
    genuine_entanglement,
    local_expectations,
    meyer_wallach,
)

__version__ = "0.1.0"

__all__ = [
    "DegenerateInputError",
    "GEReport",
    "GenentError",
    "HermitianBasis",
    "InvalidArgumentError",
    "InvariantViolationError",
    "MultipartiteState",
    "ResourceLimitError",
    "SubsystemEntanglement",
    "apply_local_unitaries",
    "basis_state",
    "bipartitions",
    "concurrence_two_qubit",
    "epsilon_subsystem",
    "expansion_coefficients",
    "ge_from_purities",
    "gell_mann_basis",
    "general_entanglement",
    "genuine_entanglement",
    "gram_schmidt_orthonormalize",
    "haar_random_unitary",
    "local_expectations",
    "merge_bipartition",
    "meyer_wallach",
    "permute_subsystems",
    "product_state",
    "purity",
    "random_pure_state",
    "reduced_density",
    "spin_half_basis",
    "spin_one_basis",
    "tensor_product",
    "verify_basis",
]
