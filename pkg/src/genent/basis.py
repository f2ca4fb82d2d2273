"""Orthonormal bases of traceless Hermitian operators under (A, B) = Tr(AB)."""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Sequence

import numpy as np

from genent.errors import DegenerateInputError, InvalidArgumentError

PIVOT_TOL = 1e-9
BASIS_TOL = 1e-10


@dataclass(frozen=True, eq=False)
class HermitianBasis:
    """Operators A_k stacked as an array of shape (count, dim, dim).

    Nothing is checked on construction; run :func:`verify_basis` for that.
    A complete basis has ``dim**2 - 1`` members.
    """

    dim: int
    operators: np.ndarray

    def __post_init__(self):
        ops = np.array(self.operators, dtype=np.complex128)
        if ops.size == 0:
            ops = np.zeros((0, self.dim, self.dim), dtype=np.complex128)
        if ops.ndim != 3 or ops.shape[1:] != (self.dim, self.dim):
            raise InvalidArgumentError(
                f"operators must have shape (count, {self.dim}, {self.dim}), got {ops.shape}"
            )
        ops.flags.writeable = False
        object.__setattr__(self, "operators", ops)

    def __len__(self):
        return self.operators.shape[0]

    def __iter__(self):
        return iter(self.operators)

    def __getitem__(self, k):
        return self.operators[k]

    def combine(self, coefficients) -> np.ndarray:
        """The operator sum_k c_k A_k."""
        return np.tensordot(np.asarray(coefficients, dtype=float), self.operators, axes=1)


def trace_inner(a: np.ndarray, b: np.ndarray) -> float:
    """Real part of Tr(AB); exact for Hermitian arguments."""
    return float(np.einsum("ij,ji->", a, b).real)


@lru_cache(maxsize=None)
def gell_mann_basis(d: int) -> HermitianBasis:
    """Generalized Gell-Mann matrices scaled to Tr(A_k^2) = 1.

    Ordering: the d(d-1)/2 symmetric off-diagonal operators, then the
    d(d-1)/2 antisymmetric ones (both by (j, k) with j < k), then the d-1
    diagonal ones.
    """
    if d < 2:
        raise InvalidArgumentError(f"dimension must be >= 2, got {d}")
    s = 1 / np.sqrt(2)
    pairs = [(j, k) for j in range(d) for k in range(j + 1, d)]
    ops = []
    for j, k in pairs:
        m = np.zeros((d, d), dtype=np.complex128)
        m[j, k] = m[k, j] = s
        ops.append(m)
    for j, k in pairs:
        m = np.zeros((d, d), dtype=np.complex128)
        m[j, k] = -1j * s
        m[k, j] = 1j * s
        ops.append(m)
    for l in range(1, d):
        diag = np.zeros(d)
        diag[:l] = 1
        diag[l] = -l
        ops.append(np.diag(diag / np.sqrt(l * (l + 1))).astype(np.complex128))
    return HermitianBasis(d, np.array(ops))


def spin_half_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(S_x, S_y, S_z) for spin 1/2 with hbar = 1."""
    sx = np.array([[0, 1], [1, 0]], dtype=np.complex128) / 2
    sy = np.array([[0, -1j], [1j, 0]], dtype=np.complex128) / 2
    sz = np.array([[1, 0], [0, -1]], dtype=np.complex128) / 2
    return sx, sy, sz


@lru_cache(maxsize=None)
def spin_half_basis() -> HermitianBasis:
    """sqrt(2) * (S_z, S_x, S_y), in that order."""
    sx, sy, sz = spin_half_operators()
    return HermitianBasis(2, np.sqrt(2) * np.array([sz, sx, sy]))


def spin_one_operators() -> tuple[np.ndarray, np.ndarray, np.ndarray]:
    """(S_x, S_y, S_z) for spin 1 in the S_z eigenbasis (m = 1, 0, -1), hbar = 1."""
    s = 1 / np.sqrt(2)
    sx = s * np.array([[0, 1, 0], [1, 0, 1], [0, 1, 0]], dtype=np.complex128)
    sy = s * np.array([[0, -1j, 0], [1j, 0, -1j], [0, 1j, 0]], dtype=np.complex128)
    sz = np.diag([1.0, 0.0, -1.0]).astype(np.complex128)
    return sx, sy, sz


def spin_one_candidates() -> list[np.ndarray]:
    """S_z, S_x, S_y, the three anticommutators S_xy, S_xz, S_yz, then S_x^2, S_y^2."""
    sx, sy, sz = spin_one_operators()
    return [
        sz,
        sx,
        sy,
        sx @ sy + sy @ sx,
        sx @ sz + sz @ sx,
        sy @ sz + sz @ sy,
        sx @ sx,
        sy @ sy,
    ]


def spin_one_closed_form() -> list[np.ndarray]:
    """The orthonormal spin-1 basis written out in terms of the candidates."""
    sz, sx, sy, sxy, sxz, syz, sx2, sy2 = spin_one_candidates()
    s = 1 / np.sqrt(2)
    eye = np.eye(3)
    return [
        s * sz,
        s * sx,
        s * sy,
        s * sxy,
        s * sxz,
        s * syz,
        np.sqrt(1.5) * sx2 - np.sqrt(2 / 3) * eye,
        np.sqrt(2) * sy2 + s * sx2 - np.sqrt(2) * eye,
    ]


@lru_cache(maxsize=None)
def spin_one_basis() -> HermitianBasis:
    return gram_schmidt_orthonormalize(spin_one_candidates())


def gram_schmidt_orthonormalize(candidates: Sequence[np.ndarray]) -> HermitianBasis:
    """Traceless-project each candidate, then orthonormalize in input order.

    Classical Gram-Schmidt with one re-orthogonalization pass. A candidate
    whose residual norm falls below ``PIVOT_TOL`` raises
    :class:`DegenerateInputError` carrying its index.
    """
    mats = [np.asarray(c, dtype=np.complex128) for c in candidates]
    if not mats:
        raise InvalidArgumentError("no candidates given")
    d = mats[0].shape[0]
    for k, m in enumerate(mats):
        if m.shape != (d, d):
            raise InvalidArgumentError(f"candidate {k} has shape {m.shape}, expected {(d, d)}")
        if not np.allclose(m, m.conj().T, atol=1e-12, rtol=0):
            raise InvalidArgumentError(f"candidate {k} is not Hermitian")

    eye = np.eye(d)
    out: list[np.ndarray] = []
    for k, m in enumerate(mats):
        v = m - (np.trace(m).real / d) * eye
        for _ in range(2):
            if out:
                q = np.array(out)
                coeffs = np.einsum("kij,ji->k", q, v).real
                v = v - np.tensordot(coeffs, q, axes=1)
        norm = np.sqrt(trace_inner(v, v))
        if norm < PIVOT_TOL:
            raise DegenerateInputError(k, norm)
        v = v / norm
        out.append((v + v.conj().T) / 2)
    return HermitianBasis(d, np.array(out))


def expansion_coefficients(sigma: np.ndarray, basis: HermitianBasis) -> np.ndarray:
    """r_k = Tr(sigma A_k), so that sigma = I/D + sum_k r_k A_k for unit-trace sigma."""
    sigma = np.asarray(sigma, dtype=np.complex128)
    if sigma.shape != (basis.dim, basis.dim):
        raise InvalidArgumentError(
            f"matrix of shape {sigma.shape} does not match basis dimension {basis.dim}"
        )
    return np.einsum("ij,kji->k", sigma, basis.operators).real


def reconstruct(coefficients, basis: HermitianBasis) -> np.ndarray:
    return np.eye(basis.dim) / basis.dim + basis.combine(coefficients)


@dataclass(frozen=True)
class BasisReport:
    dim: int
    count: int
    expected_count: int
    hermiticity_defect: float
    trace_defect: float
    gram_defect: float
    tolerance: float

    @property
    def count_ok(self) -> bool:
        return self.count == self.expected_count

    @property
    def passed(self) -> bool:
        return (
            self.count_ok
            and self.hermiticity_defect <= self.tolerance
            and self.trace_defect <= self.tolerance
            and self.gram_defect <= self.tolerance
        )

    def failures(self) -> list[str]:
        out = []
        if not self.count_ok:
            out.append(f"count {self.count} != {self.expected_count}")
        for name in ("hermiticity_defect", "trace_defect", "gram_defect"):
            val = getattr(self, name)
            if val > self.tolerance:
                out.append(f"{name} {val:.3e} > {self.tolerance:.0e}")
        return out


def verify_basis(basis: HermitianBasis, tol: float = BASIS_TOL) -> BasisReport:
    ops = basis.operators
    if len(ops) == 0:
        herm = trace = gram = 0.0
    else:
        herm = float(np.abs(ops - np.conj(np.swapaxes(ops, 1, 2))).max())
        trace = float(np.abs(np.einsum("kii->k", ops)).max())
        g = np.einsum("kij,lji->kl", ops, ops)
        gram = float(np.abs(g - np.eye(len(ops))).max())
    return BasisReport(
        dim=basis.dim,
        count=len(ops),
        expected_count=basis.dim**2 - 1,
        hermiticity_defect=herm,
        trace_defect=trace,
        gram_defect=gram,
        tolerance=tol,
    )


def random_unit_trace_hermitian(d: int, seed=None) -> np.ndarray:
    """Hermitian, trace one, otherwise unconstrained (not necessarily positive)."""
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    h = (g + g.conj().T) / 2
    return h + ((1 - np.trace(h).real) / d) * np.eye(d)


def random_density_matrix(d: int, seed=None) -> np.ndarray:
    rng = np.random.default_rng(seed)
    g = rng.standard_normal((d, d)) + 1j * rng.standard_normal((d, d))
    rho = g @ g.conj().T
    return rho / np.trace(rho).real


def lemma_defect(sigma: np.ndarray, basis: HermitianBasis) -> float:
    """|sum_k Tr(sigma A_k)^2 - (Tr sigma^2 - 1/D)|, zero for a complete basis."""
    r = expansion_coefficients(sigma, basis)
    return abs(float(r @ r) - (trace_inner(sigma, sigma) - 1 / basis.dim))
