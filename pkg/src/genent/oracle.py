"""Brute-force route to the per-subsystem entanglement.

Here nothing is taken from the closed form. The rest of the system is
measured with a rank-one projective measurement, the collapsed states are
built explicitly, and the squared shift of a local expectation value is
maximized over unit-norm traceless observables. The results are compared
against :mod:`genent.measure` in the test-suite and by ``genent verify``.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Optional, Sequence

import numpy as np

from genent.basis import HermitianBasis, gell_mann_basis
from genent.errors import InvalidArgumentError
from genent.measure import expectation_vector, ge_purity
from genent.tensor import (
    MultipartiteState,
    apply_local_unitaries,
    haar_random_unitary,
    reduced_density,
    split_matrix,
)

PRUNE_TOL = 1e-12
COMPLETENESS_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class ProjectiveMeasurement:
    """Rank-one projectors |chi_i><chi_i| on every subsystem except ``excluded``.

    ``rest_basis`` holds the vectors chi_i as columns, expressed in the
    product basis of the remaining subsystems (ascending index order).
    """

    dims: tuple[int, ...]
    excluded: int
    rest_basis: np.ndarray

    def __post_init__(self):
        object.__setattr__(self, "dims", tuple(int(d) for d in self.dims))
        if not 0 <= self.excluded < len(self.dims):
            raise InvalidArgumentError(f"excluded index {self.excluded} out of range")
        basis = np.asarray(self.rest_basis, dtype=np.complex128)
        if basis.ndim != 2 or basis.shape[0] != self.rest_dim:
            raise InvalidArgumentError(
                f"rest basis must have {self.rest_dim} rows, got shape {basis.shape}"
            )
        object.__setattr__(self, "rest_basis", basis)

    @property
    def rest_dim(self) -> int:
        return prod(d for k, d in enumerate(self.dims) if k != self.excluded)

    def completeness_defect(self) -> float:
        """max |B^dag B - I| and max |B B^dag - I| over the rest basis B."""
        b = self.rest_basis
        gram = np.abs(b.conj().T @ b - np.eye(b.shape[1])).max()
        if b.shape[1] != b.shape[0]:
            return float("inf")
        return float(max(gram, np.abs(b @ b.conj().T - np.eye(b.shape[0])).max()))

    def check(self):
        defect = self.completeness_defect()
        if defect > COMPLETENESS_TOL:
            raise InvalidArgumentError(
                f"measurement is not a complete orthonormal rank-one set (defect {defect:.3e})"
            )


@dataclass(frozen=True, eq=False)
class MeasurementOutcome:
    index: int
    probability: float
    post_state: MultipartiteState
    excluded: int


@dataclass(frozen=True, eq=False)
class ObservableElement:
    """Local operator on ``subsystem``, implicitly tensored with the identity.

    Members of the admissible set are traceless with Tr(O^2) = 1; use
    :meth:`in_omega` to check. Evaluation functions accept any Hermitian
    operator so that scaling and shift behaviour can be probed.
    """

    subsystem: int
    local_operator: np.ndarray

    @classmethod
    def from_direction(cls, subsystem: int, direction, basis: HermitianBasis):
        o = np.asarray(direction, dtype=float)
        return cls(subsystem, basis.combine(o / np.linalg.norm(o)))

    def in_omega(self, tol: float = 1e-10) -> bool:
        o = np.asarray(self.local_operator)
        return (
            np.allclose(o, o.conj().T, atol=1e-12, rtol=0)
            and abs(np.trace(o)) <= 1e-12
            and abs(np.einsum("ij,ji->", o, o).real - 1) <= tol
        )


def computational_measurement(dims: Sequence[int], excluded: int) -> ProjectiveMeasurement:
    rest = prod(d for k, d in enumerate(dims) if k != excluded)
    return ProjectiveMeasurement(tuple(dims), excluded, np.eye(rest))


def random_projective_measurement(dims: Sequence[int], excluded: int, seed=None) -> ProjectiveMeasurement:
    """Rank-one measurement on the rest space along a Haar-random orthonormal basis."""
    dims = tuple(int(d) for d in dims)
    if not 0 <= excluded < len(dims):
        raise InvalidArgumentError(f"excluded index {excluded} out of range")
    rest = prod(d for k, d in enumerate(dims) if k != excluded)
    return ProjectiveMeasurement(dims, excluded, haar_random_unitary(rest, seed))


def _reassemble(local: np.ndarray, rest: np.ndarray, dims, j: int) -> np.ndarray:
    """Amplitudes of local (x) rest with the local factor put back at position j."""
    rest_dims = [d for k, d in enumerate(dims) if k != j]
    t = np.outer(local, rest).reshape([dims[j]] + rest_dims)
    return np.moveaxis(t, 0, j).reshape(-1)


def apply_measurement(state: MultipartiteState, m: ProjectiveMeasurement) -> list[MeasurementOutcome]:
    """Outcome probabilities and collapsed states; outcomes with p <= 1e-12 are dropped."""
    if m.dims != state.dims:
        raise InvalidArgumentError(f"measurement dims {m.dims} do not match state dims {state.dims}")
    m.check()
    j = m.excluded
    # column i holds the unnormalized local vector left on subsystem j by outcome i
    local = split_matrix(state, [j]) @ m.rest_basis.conj()
    probs = np.einsum("ai,ai->i", local.conj(), local).real
    out = []
    for i, p in enumerate(probs):
        if p <= PRUNE_TOL:
            continue
        phi = local[:, i] / np.sqrt(p)
        amps = _reassemble(phi, m.rest_basis[:, i], state.dims, j)
        out.append(MeasurementOutcome(i, float(p), MultipartiteState.normalized(state.dims, amps), j))
    return out


def _local_mean(state: MultipartiteState, obs: ObservableElement) -> float:
    rho = reduced_density(state, [obs.subsystem])
    return float(np.einsum("ij,ji->", rho, np.asarray(obs.local_operator)).real)


def r_value(state: MultipartiteState, outcome: MeasurementOutcome, obs: ObservableElement) -> float:
    """(Tr(rho O) - Tr(rho_i O))^2: squared shift of <O> caused by outcome i."""
    if obs.subsystem != outcome.excluded:
        raise InvalidArgumentError(
            f"observable acts on subsystem {obs.subsystem}, "
            f"but the measurement left subsystem {outcome.excluded} alone"
        )
    return (_local_mean(state, obs) - _local_mean(outcome.post_state, obs)) ** 2


def _basis_for(state: MultipartiteState, j: int, basis: Optional[HermitianBasis]) -> HermitianBasis:
    if basis is None:
        return gell_mann_basis(state.dims[j])
    if basis.dim != state.dims[j]:
        raise InvalidArgumentError(f"basis dimension {basis.dim} != subsystem dimension {state.dims[j]}")
    return basis


def max_r_exact(
    state: MultipartiteState,
    outcome: MeasurementOutcome,
    j: int,
    basis: Optional[HermitianBasis] = None,
) -> float:
    """Maximum of :func:`r_value` over unit-norm traceless observables on j.

    Writing O = o . A with |o| = 1, R = (o . delta)^2 with delta the change of
    the expectation vector, which peaks at o parallel to delta.
    """
    basis = _basis_for(state, j, basis)
    delta = expectation_vector(reduced_density(outcome.post_state, [j]), basis) - expectation_vector(
        reduced_density(state, [j]), basis
    )
    return float(delta @ delta)


def random_directions(count: int, dim: int, rng: np.random.Generator) -> np.ndarray:
    """Rows uniform on the unit sphere in R^dim."""
    g = rng.standard_normal((count, dim))
    return g / np.linalg.norm(g, axis=1, keepdims=True)


def max_r_montecarlo(
    state: MultipartiteState,
    outcome: MeasurementOutcome,
    j: int,
    basis: Optional[HermitianBasis] = None,
    samples: int = 10_000,
    seed=None,
    chunk: int = 4096,
) -> float:
    """Largest :func:`r_value` seen over ``samples`` random admissible observables.

    Each observable is assembled as a matrix and evaluated as
    Tr(rho O) - Tr(rho_i O); the expectation-vector shortcut is not used.
    """
    if samples < 1:
        raise InvalidArgumentError("samples must be >= 1")
    if outcome.excluded != j:
        raise InvalidArgumentError("outcome does not come from a measurement excluding subsystem j")
    basis = _basis_for(state, j, basis)
    rng = np.random.default_rng(seed)
    rho = reduced_density(state, [j])
    rho_i = reduced_density(outcome.post_state, [j])
    best = 0.0
    done = 0
    while done < samples:
        n = min(chunk, samples - done)
        ops = np.tensordot(random_directions(n, len(basis), rng), basis.operators, axes=1)
        shift = np.einsum("sab,ba->s", ops, rho).real - np.einsum("sab,ba->s", ops, rho_i).real
        best = max(best, float(np.max(shift**2)))
        done += n
    return best


def epsilon_via_measurement(
    state: MultipartiteState,
    j: int,
    m: ProjectiveMeasurement,
    basis: Optional[HermitianBasis] = None,
) -> float:
    """Average over outcomes of the maximal squared expectation shift."""
    if m.excluded != j:
        raise InvalidArgumentError(f"measurement excludes subsystem {m.excluded}, not {j}")
    basis = _basis_for(state, j, basis)
    before = expectation_vector(reduced_density(state, [j]), basis)
    total = 0.0
    for o in apply_measurement(state, m):
        delta = expectation_vector(reduced_density(o.post_state, [j]), basis) - before
        total += o.probability * float(delta @ delta)
    return total


def mean_expectation_defect(
    state: MultipartiteState, m: ProjectiveMeasurement, basis: Optional[HermitianBasis] = None
) -> float:
    """max_k |sum_i p_i <A_k>_{rho_i} - <A_k>_rho| for the excluded subsystem."""
    j = m.excluded
    basis = _basis_for(state, j, basis)
    before = expectation_vector(reduced_density(state, [j]), basis)
    avg = np.zeros_like(before)
    for o in apply_measurement(state, m):
        avg += o.probability * expectation_vector(reduced_density(o.post_state, [j]), basis)
    return float(np.abs(avg - before).max())


def measure_local(state: MultipartiteState, j: int, local_basis: np.ndarray) -> list[tuple[float, MultipartiteState]]:
    """Rank-one measurement of subsystem j alone, along the columns of ``local_basis``."""
    local_basis = np.asarray(local_basis, dtype=np.complex128)
    m = split_matrix(state, [j])
    # row i: what the rest is left in after projecting j onto column i
    rest = local_basis.conj().T @ m
    probs = np.einsum("ia,ia->i", rest.conj(), rest).real
    out = []
    for i, p in enumerate(probs):
        if p <= PRUNE_TOL:
            continue
        amps = _reassemble(local_basis[:, i], rest[i] / np.sqrt(p), state.dims, j)
        out.append((float(p), MultipartiteState.normalized(state.dims, amps)))
    return out


def locc_monotonicity_trial(state: MultipartiteState, seed=None) -> tuple[float, float]:
    """One round of measure-then-correct LOCC; returns (E_g before, mean E_g after).

    A random subsystem is measured in a Haar-random orthonormal basis, then
    every other subsystem gets its own Haar-random unitary drawn afresh for
    each outcome (the classically communicated correction).
    """
    rng = np.random.default_rng(seed)
    n = state.n_subsystems
    j = int(rng.integers(n))
    before = ge_purity(state)
    after = 0.0
    for p, post in measure_local(state, j, haar_random_unitary(state.dims[j], rng)):
        unitaries = [None if k == j else haar_random_unitary(d, rng) for k, d in enumerate(state.dims)]
        after += p * ge_purity(apply_local_unitaries(post, unitaries))
    return before, after
