"""Pure states on tensor-product spaces and the linear algebra around them.

Amplitudes are stored flat in lexicographic order over the local basis labels,
subsystem 0 most significant, so ``amplitudes.reshape(dims)`` is the state
tensor with one axis per subsystem. Subsystem indices are 0-based throughout
the Python API.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import prod
from typing import Iterable, Sequence

import numpy as np

from genent.errors import (
    InvalidArgumentError,
    InvariantViolationError,
    ResourceLimitError,
)

NORM_TOL = 1e-10
MAX_AMPLITUDES = 2**22


def _rng(seed) -> np.random.Generator:
    return np.random.default_rng(seed)


def _check_dims(dims: Sequence[int]) -> tuple[int, ...]:
    dims = tuple(int(d) for d in dims)
    if len(dims) == 0:
        raise InvalidArgumentError("a state needs at least one subsystem")
    for j, d in enumerate(dims):
        if d < 2:
            raise InvalidArgumentError(
                f"subsystem {j} has dimension {d}; every subsystem needs dimension >= 2"
            )
    total = prod(dims)
    if total > MAX_AMPLITUDES:
        raise ResourceLimitError(
            f"dims {dims} need {total} amplitudes, above the limit of {MAX_AMPLITUDES}"
        )
    return dims


@dataclass(frozen=True, eq=False)
class MultipartiteState:
    """A normalized pure state |psi> with its local dimensions.

    Construction is strict: a squared norm further than ``NORM_TOL`` from one
    raises :class:`InvariantViolationError`. Use :meth:`normalized` to ingest
    data that still needs rescaling.

    Single-subsystem states are allowed so that local factors can be built
    and combined with :func:`tensor_product`; the entanglement functions
    require at least two subsystems.
    """

    dims: tuple[int, ...]
    amplitudes: np.ndarray

    def __post_init__(self):
        dims = _check_dims(self.dims)
        amps = np.array(self.amplitudes, dtype=np.complex128).reshape(-1)
        if amps.size != prod(dims):
            raise InvalidArgumentError(
                f"{amps.size} amplitudes do not match dims {dims} "
                f"(expected {prod(dims)})"
            )
        if not np.all(np.isfinite(amps)):
            raise InvariantViolationError("finite amplitudes")
        norm_sq = float(np.vdot(amps, amps).real)
        if abs(norm_sq - 1.0) > NORM_TOL:
            raise InvariantViolationError(
                "unit norm", f"squared norm {norm_sq!r} differs from 1 by more than {NORM_TOL}"
            )
        amps.flags.writeable = False
        object.__setattr__(self, "dims", dims)
        object.__setattr__(self, "amplitudes", amps)

    @classmethod
    def normalized(cls, dims: Sequence[int], amplitudes) -> "MultipartiteState":
        amps = np.asarray(amplitudes, dtype=np.complex128).reshape(-1)
        norm = np.linalg.norm(amps)
        if norm == 0 or not np.isfinite(norm):
            raise InvalidArgumentError("cannot normalize a zero or non-finite vector")
        return cls(dims, amps / norm)

    @property
    def n_subsystems(self) -> int:
        return len(self.dims)

    @property
    def tensor(self) -> np.ndarray:
        return self.amplitudes.reshape(self.dims)

    def density_matrix(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())

    def __repr__(self):
        return f"MultipartiteState(dims={self.dims}, amplitudes={self.amplitudes!r})"


def basis_state(dims: Sequence[int], labels: Sequence[int]) -> MultipartiteState:
    """Computational basis state |labels[0], labels[1], ...>."""
    dims = _check_dims(dims)
    if len(labels) != len(dims):
        raise InvalidArgumentError("need one label per subsystem")
    for lab, d in zip(labels, dims):
        if not 0 <= lab < d:
            raise InvalidArgumentError(f"label {lab} out of range for dimension {d}")
    amps = np.zeros(prod(dims), dtype=np.complex128)
    amps[np.ravel_multi_index(tuple(labels), dims)] = 1.0
    return MultipartiteState(dims, amps)


def tensor_product(a: MultipartiteState, b: MultipartiteState) -> MultipartiteState:
    return MultipartiteState(a.dims + b.dims, np.kron(a.amplitudes, b.amplitudes))


def product_state(factors: Iterable) -> MultipartiteState:
    """Tensor product of local vectors; each factor is normalized first."""
    factors = [np.asarray(f, dtype=np.complex128).reshape(-1) for f in factors]
    if not factors:
        raise InvalidArgumentError("need at least one factor")
    amps = np.ones(1, dtype=np.complex128)
    for f in factors:
        amps = np.kron(amps, f / np.linalg.norm(f))
    return MultipartiteState([f.size for f in factors], amps)


def _check_index_set(indices, n: int, what: str) -> list[int]:
    out = sorted({int(k) for k in indices})
    for k in out:
        if not 0 <= k < n:
            raise InvalidArgumentError(f"{what}: subsystem index {k} out of range for N={n}")
    return out


def split_matrix(state: MultipartiteState, keep: Sequence[int]) -> np.ndarray:
    """The state as a (dim_keep, dim_rest) matrix, kept subsystems first in order."""
    rest = [k for k in range(state.n_subsystems) if k not in keep]
    t = np.transpose(state.tensor, list(keep) + rest)
    d_keep = prod(state.dims[k] for k in keep)
    return t.reshape(d_keep, -1)


def reduced_density(state: MultipartiteState, keep) -> np.ndarray:
    """Partial trace of |psi><psi| over every subsystem not in ``keep``.

    The kept subsystems appear in ascending index order in the result.
    """
    keep = _check_index_set(keep, state.n_subsystems, "keep")
    if not keep:
        raise InvalidArgumentError("keep must name at least one subsystem")
    m = split_matrix(state, keep)
    return m @ m.conj().T


def purity(dm: np.ndarray) -> float:
    """Tr(rho^2) of a Hermitian matrix."""
    dm = np.asarray(dm)
    return float(np.einsum("ij,ji->", dm, dm).real)


def subsystem_purity(state: MultipartiteState, block) -> float:
    """Purity of the reduced state on ``block``, via whichever side is smaller.

    For a pure global state both sides of a cut share their nonzero spectrum,
    so only a min(d_block, d_rest)-sized matrix is ever formed.
    """
    block = _check_index_set(block, state.n_subsystems, "block")
    if not block:
        raise InvalidArgumentError("block must name at least one subsystem")
    m = split_matrix(state, block)
    small = m @ m.conj().T if m.shape[0] <= m.shape[1] else m.conj().T @ m
    return purity(small)


def _check_perm(perm, n: int) -> list[int]:
    perm = [int(p) for p in perm]
    if sorted(perm) != list(range(n)):
        raise InvalidArgumentError(f"{perm} is not a permutation of 0..{n - 1}")
    return perm


def permute_subsystems(state: MultipartiteState, perm: Sequence[int]) -> MultipartiteState:
    """Reorder subsystems: position ``k`` of the result holds old subsystem ``perm[k]``."""
    perm = _check_perm(perm, state.n_subsystems)
    t = np.transpose(state.tensor, perm)
    return MultipartiteState([state.dims[p] for p in perm], t.reshape(-1))


def merge_bipartition(state: MultipartiteState, block) -> MultipartiteState:
    """View the state as bipartite: ``block`` (ascending) vs the rest (ascending)."""
    n = state.n_subsystems
    block = _check_index_set(block, n, "block")
    if not block or len(block) == n:
        raise InvalidArgumentError("block must be a nonempty proper subset of the subsystems")
    m = split_matrix(state, block)
    return MultipartiteState(m.shape, m.reshape(-1))


def apply_local_unitaries(state: MultipartiteState, unitaries: Sequence) -> MultipartiteState:
    """Apply U_0 (x) U_1 (x) ... without forming the full operator.

    ``None`` entries leave the corresponding subsystem untouched.
    """
    if len(unitaries) != state.n_subsystems:
        raise InvalidArgumentError("need one unitary (or None) per subsystem")
    t = state.tensor
    for j, u in enumerate(unitaries):
        if u is None:
            continue
        u = np.asarray(u, dtype=np.complex128)
        if u.shape != (state.dims[j], state.dims[j]):
            raise InvalidArgumentError(
                f"unitary {j} has shape {u.shape}, subsystem dimension is {state.dims[j]}"
            )
        t = np.moveaxis(np.tensordot(u, t, axes=([1], [j])), 0, j)
    # unitaries preserve the norm only up to rounding
    amps = t.reshape(-1)
    return MultipartiteState(state.dims, amps / np.linalg.norm(amps))


def haar_random_unitary(d: int, seed=None) -> np.ndarray:
    """Haar-distributed d x d unitary.

    QR of a complex Ginibre matrix, with the phases of R's diagonal pushed
    into Q so that the factorization is unique (Mezzadri's recipe).
    ``seed`` may be anything :func:`numpy.random.default_rng` accepts.
    """
    if d < 1:
        raise InvalidArgumentError(f"dimension must be positive, got {d}")
    rng = _rng(seed)
    z = (rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))) / np.sqrt(2)
    q, r = np.linalg.qr(z)
    diag = np.diagonal(r)
    return q * (diag / np.abs(diag))


def random_pure_state(dims: Sequence[int], seed=None) -> MultipartiteState:
    """Complex-Gaussian amplitudes, normalized (the unitarily invariant measure)."""
    dims = _check_dims(dims)
    if len(dims) < 2:
        raise InvalidArgumentError("random states need at least two subsystems")
    rng = _rng(seed)
    total = prod(dims)
    amps = rng.standard_normal(total) + 1j * rng.standard_normal(total)
    return MultipartiteState.normalized(dims, amps)


def random_local_vector(d: int, rng: np.random.Generator) -> np.ndarray:
    v = rng.standard_normal(d) + 1j * rng.standard_normal(d)
    return v / np.linalg.norm(v)


def random_product_state(dims: Sequence[int], seed=None) -> MultipartiteState:
    rng = _rng(seed)
    return product_state([random_local_vector(d, rng) for d in _check_dims(dims)])
