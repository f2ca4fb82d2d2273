"""General Entanglement of pure states, its genuine-multipartite variant and
the qubit special cases (Meyer-Wallach, concurrence).

For a subsystem of dimension D with reduced state rho_j and an orthonormal
traceless Hermitian basis {A_k}, the per-subsystem entanglement is

    eps_j = 1 - 1/D - |<A>|^2,      <A>_k = Tr(rho_j A_k)

and since |<A>|^2 = Tr(rho_j^2) - 1/D for any such basis, the normalized
measure is an affine function of the local purities:

    E_g = 1 + mean_j 1/(D_j - 1) - mean_j D_j/(D_j - 1) Tr(rho_j^2)
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Mapping, Optional, Sequence

import numpy as np

from genent.basis import HermitianBasis, gell_mann_basis, spin_half_operators
from genent.errors import InvalidArgumentError, InvariantViolationError
from genent.tensor import (
    MultipartiteState,
    merge_bipartition,
    purity,
    reduced_density,
    subsystem_purity,
)

@dataclass(frozen=True)
class SubsystemEntanglement:
    index: int
    dim: int
    epsilon_raw: float
    epsilon_normalized: float
    expectation_norm_sq: float


@dataclass(frozen=True)
class GEReport:
    dims: tuple[int, ...]
    per_subsystem: tuple[SubsystemEntanglement, ...]
    ge_normalized: float
    ge_raw: float
    ge_via_purity: float
    agreement_defect: float
    genuine: Optional[float] = None
    purities: tuple[float, ...] = field(default=(), repr=False)


def _require_ge_state(state: MultipartiteState):
    if state.n_subsystems < 2:
        raise InvalidArgumentError(
            f"entanglement needs at least two subsystems, got dims {state.dims}"
        )
    # dims >= 2 is already enforced by MultipartiteState


def _check_index(state: MultipartiteState, j: int) -> int:
    j = int(j)
    if not 0 <= j < state.n_subsystems:
        raise InvalidArgumentError(f"subsystem index {j} out of range for N={state.n_subsystems}")
    return j


def expectation_vector(rho: np.ndarray, basis: HermitianBasis) -> np.ndarray:
    """Tr(rho A_k) for each basis operator; rejects a noticeably complex result."""
    if rho.shape != (basis.dim, basis.dim):
        raise InvalidArgumentError(
            f"reduced state of dimension {rho.shape[0]} does not match basis dimension {basis.dim}"
        )
    vals = np.einsum("ij,kji->k", rho, basis.operators)
    if vals.size and np.abs(vals.imag).max() > 1e-10:
        raise InvariantViolationError(
            "real expectation values", "basis operators are probably not Hermitian"
        )
    return vals.real


def local_expectations(
    state: MultipartiteState, j: int, basis: Optional[HermitianBasis] = None
) -> np.ndarray:
    j = _check_index(state, j)
    if basis is None:
        basis = gell_mann_basis(state.dims[j])
    return expectation_vector(reduced_density(state, [j]), basis)


def epsilon_subsystem(
    state: MultipartiteState, j: int, basis: Optional[HermitianBasis] = None
) -> SubsystemEntanglement:
    j = _check_index(state, j)
    d = state.dims[j]
    a = local_expectations(state, j, basis)
    norm_sq = float(a @ a)
    raw = 1 - 1 / d - norm_sq
    return SubsystemEntanglement(
        index=j,
        dim=d,
        epsilon_raw=raw,
        epsilon_normalized=raw / (1 - 1 / d),
        expectation_norm_sq=norm_sq,
    )


def ge_from_purities(dims: Sequence[int], purities: Sequence[float]) -> float:
    """Normalized GE from local dimensions and the purities Tr(rho_j^2)."""
    d = np.asarray(dims, dtype=float)
    p = np.asarray(purities, dtype=float)
    return float(1 + np.mean(1 / (d - 1)) - np.mean(d / (d - 1) * p))


def ge_purity(state: MultipartiteState) -> float:
    """Normalized GE by the purity route alone (no operator basis)."""
    _require_ge_state(state)
    purities = [subsystem_purity(state, [j]) for j in range(state.n_subsystems)]
    return ge_from_purities(state.dims, purities)


def general_entanglement(
    state: MultipartiteState,
    bases: Optional[Mapping[int, HermitianBasis]] = None,
    genuine: bool = False,
) -> GEReport:
    """Full GE report for a pure state.

    ``ge_normalized`` comes from local expectation values in an operator
    basis (generalized Gell-Mann unless ``bases`` maps a dimension to another
    basis). ``ge_via_purity`` is computed independently from the reduced-state
    purities, and ``agreement_defect`` is the gap between the two.
    """
    _require_ge_state(state)
    bases = bases or {}
    n = state.n_subsystems
    per = []
    purities = []
    for j in range(n):
        d = state.dims[j]
        rho = reduced_density(state, [j])
        purities.append(purity(rho))
        basis = bases.get(d)
        if basis is None:
            basis = gell_mann_basis(d)
        a = expectation_vector(rho, basis)
        norm_sq = float(a @ a)
        raw = 1 - 1 / d - norm_sq
        per.append(SubsystemEntanglement(j, d, raw, raw / (1 - 1 / d), norm_sq))

    ge_norm = 1 - sum(s.dim / (s.dim - 1) * s.expectation_norm_sq for s in per) / n
    ge_raw = sum(s.epsilon_raw for s in per) / n
    ge_pur = ge_from_purities(state.dims, purities)
    gen = genuine_entanglement(state, ge=ge_pur) if genuine else None
    return GEReport(
        dims=state.dims,
        per_subsystem=tuple(per),
        ge_normalized=float(ge_norm),
        ge_raw=float(ge_raw),
        ge_via_purity=ge_pur,
        agreement_defect=abs(float(ge_norm) - ge_pur),
        genuine=gen,
        purities=tuple(purities),
    )


def bipartitions(n: int) -> list[tuple[int, ...]]:
    """Canonical blocks of every two-way split of n subsystems.

    Each block contains subsystem 0, so a split and its complement are
    listed once: 2**(n-1) - 1 blocks in total.
    """
    if n < 2:
        raise InvalidArgumentError("bipartitions need at least two subsystems")
    others = range(1, n)
    out = []
    for size in range(0, n - 1):
        for extra in combinations(others, size):
            out.append((0,) + extra)
    return out


def genuine_entanglement(state: MultipartiteState, ge: Optional[float] = None) -> float:
    """Minimum of E_g over the state itself and every bipartite regrouping.

    For two subsystems the only regrouping is the state itself, so this is
    just E_g. The merged bipartite states are scored with the same
    normalization as any other state, block dimensions included.
    """
    _require_ge_state(state)
    best = ge_purity(state) if ge is None else ge
    if state.n_subsystems == 2:
        return best
    for block in bipartitions(state.n_subsystems):
        merged = merge_bipartition(state, block)
        p = subsystem_purity(merged, [0])
        # both halves of a pure bipartite state have the same purity
        best = min(best, ge_from_purities(merged.dims, [p, p]))
    return best


def meyer_wallach(state: MultipartiteState) -> float:
    """1 - (4/N) sum_j |<S^(j)>|^2 for an all-qubit state, S = sigma/2."""
    if any(d != 2 for d in state.dims):
        raise InvalidArgumentError(f"Meyer-Wallach is defined for qubits only, got dims {state.dims}")
    _require_ge_state(state)
    spins = np.array(spin_half_operators())
    total = 0.0
    for j in range(state.n_subsystems):
        rho = reduced_density(state, [j])
        s = np.einsum("ij,kji->k", rho, spins).real
        total += float(s @ s)
    return 1 - 4 * total / state.n_subsystems


_SIGMA_YY = np.kron(np.array([[0, -1j], [1j, 0]]), np.array([[0, -1j], [1j, 0]]))


def concurrence_two_qubit(state: MultipartiteState) -> float:
    """|<psi| sigma_y (x) sigma_y |psi*>| for a pure two-qubit state."""
    if state.dims != (2, 2):
        raise InvalidArgumentError(f"concurrence needs dims (2, 2), got {state.dims}")
    psi = state.amplitudes
    return float(abs(np.vdot(psi, _SIGMA_YY @ psi.conj())))
