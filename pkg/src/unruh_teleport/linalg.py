"""Dense complex linear algebra for small multi-qubit density matrices.

Matrices are plain ``numpy.ndarray`` objects of dtype ``complex128``.
Multi-qubit indices are big-endian: the leftmost subsystem label is the most
significant bit of a row/column index, so ``|a b c>`` sits at ``4a + 2b + c``.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

import numpy as np

MAX_DIM = 16
DEFAULT_TOL = 1e-10
JACOBI_TOL = 1e-12
JACOBI_MAX_SWEEPS = 100


class LinalgError(ValueError):
    """Raised on malformed matrices or dimension mismatches."""


class NotHermitianError(LinalgError):
    pass


class ConvergenceError(RuntimeError):
    """The Jacobi eigensolver hit its sweep cap."""

    def __init__(self, sweeps: int, residual: float):
        super().__init__(
            f"Jacobi eigensolver did not converge after {sweeps} sweeps "
            f"(off-diagonal residual {residual:.3e})"
        )
        self.sweeps = sweeps
        self.residual = residual


def as_matrix(a) -> np.ndarray:
    """Coerce ``a`` to a finite 2-D complex array."""
    m = np.asarray(a, dtype=np.complex128)
    if m.ndim != 2:
        raise LinalgError(f"expected a 2-D matrix, got shape {m.shape}")
    if not np.all(np.isfinite(m)):
        raise LinalgError("matrix contains NaN or Inf entries")
    return m


def _square(a) -> np.ndarray:
    m = as_matrix(a)
    if m.shape[0] != m.shape[1]:
        raise LinalgError(f"expected a square matrix, got shape {m.shape}")
    return m


def kron(a, b) -> np.ndarray:
    """Kronecker product ``a ⊗ b``.

    Entry ``(i*rows(b) + k, j*cols(b) + l)`` equals ``a[i, j] * b[k, l]``.
    Rectangular factors are accepted so that isometries (e.g. 4x2 column
    maps) can be tensored; results larger than 16 in either direction are
    rejected.
    """
    ma, mb = as_matrix(a), as_matrix(b)
    rows = ma.shape[0] * mb.shape[0]
    cols = ma.shape[1] * mb.shape[1]
    if rows > MAX_DIM or cols > MAX_DIM:
        raise LinalgError(f"kron result {rows}x{cols} exceeds dimension {MAX_DIM}")
    return np.kron(ma, mb)


def matmul(a, b) -> np.ndarray:
    ma, mb = _square(a), _square(b)
    if ma.shape != mb.shape:
        raise LinalgError(f"dimension mismatch: {ma.shape} vs {mb.shape}")
    return ma @ mb


def dagger(a) -> np.ndarray:
    return as_matrix(a).conj().T


@dataclass(frozen=True)
class QubitOrdering:
    """Ordered subsystem labels; the first label is the most significant bit."""

    labels: tuple[str, ...]

    def __init__(self, labels: Sequence[str]):
        labels = tuple(labels)
        if not labels:
            raise LinalgError("ordering needs at least one label")
        if len(set(labels)) != len(labels):
            raise LinalgError(f"duplicate labels in {labels}")
        object.__setattr__(self, "labels", labels)

    @property
    def dim(self) -> int:
        return 2 ** len(self.labels)


def partial_trace(m, ordering: QubitOrdering | Sequence[str], keep: Sequence[str]) -> np.ndarray:
    """Trace out every qubit not in ``keep``.

    The kept qubits stay in their original relative order, whatever order
    ``keep`` lists them in.
    """
    if not isinstance(ordering, QubitOrdering):
        ordering = QubitOrdering(ordering)
    rho = _square(m)
    n = len(ordering.labels)
    if rho.shape[0] != ordering.dim:
        raise LinalgError(f"matrix dimension {rho.shape[0]} does not match {n} qubits")
    keep_set = set(keep)
    if not keep_set:
        raise LinalgError("keep-set is empty")
    unknown = keep_set - set(ordering.labels)
    if unknown:
        raise LinalgError(f"labels {sorted(unknown)} not in ordering {ordering.labels}")

    kept = [i for i, lab in enumerate(ordering.labels) if lab in keep_set]
    traced = [i for i, lab in enumerate(ordering.labels) if lab not in keep_set]
    t = rho.reshape((2,) * (2 * n))
    # Row axes are 0..n-1, column axes n..2n-1; contract each traced pair.
    row_idx = list(range(n))
    col_idx = [n + i for i in range(n)]
    for i in traced:
        col_idx[i] = row_idx[i]
    out_idx = [row_idx[i] for i in kept] + [col_idx[i] for i in kept]
    reduced = np.einsum(t, row_idx + col_idx, out_idx)
    d = 2 ** len(kept)
    return reduced.reshape(d, d)


def hermiticity_residual(m) -> float:
    a = _square(m)
    return float(np.max(np.abs(a - a.conj().T)))


def _off_diagonal_max(a: np.ndarray) -> float:
    off = a - np.diag(np.diag(a))
    return float(np.max(np.abs(off))) if a.shape[0] > 1 else 0.0


def hermitian_eigh(m, tol: float = DEFAULT_TOL) -> tuple[np.ndarray, np.ndarray]:
    """Eigen-decomposition of a Hermitian matrix by cyclic complex Jacobi.

    Returns ``(values, vectors)`` with ascending real eigenvalues and the
    eigenvectors as columns. Each rotation first removes the phase of the
    pivot element and then applies the real symmetric Schur rotation.
    """
    a = _square(m).copy()
    if hermiticity_residual(a) > tol * max(1.0, float(np.max(np.abs(a)))):
        raise NotHermitianError(
            f"matrix is not Hermitian (residual {hermiticity_residual(a):.3e})"
        )
    a = 0.5 * (a + a.conj().T)
    n = a.shape[0]
    v = np.eye(n, dtype=np.complex128)
    threshold = JACOBI_TOL * max(1.0, float(np.linalg.norm(a)))

    sweeps = 0
    while _off_diagonal_max(a) >= threshold:
        if sweeps >= JACOBI_MAX_SWEEPS:
            raise ConvergenceError(sweeps, _off_diagonal_max(a))
        sweeps += 1
        for p in range(n - 1):
            for q in range(p + 1, n):
                apq = a[p, q]
                mag = abs(apq)
                if mag < 1e-300:
                    continue
                phase = apq / mag
                app, aqq = a[p, p].real, a[q, q].real
                tau = (aqq - app) / (2.0 * mag)
                t = (1.0 if tau >= 0 else -1.0) / (abs(tau) + np.sqrt(1.0 + tau * tau))
                c = 1.0 / np.sqrt(1.0 + t * t)
                s = t * c
                # column q is multiplied by conj(phase) so that a[p, q] becomes real
                rot = np.array([[c, s], [-s * phase.conjugate(), c * phase.conjugate()]])
                cols = [p, q]
                a[:, cols] = a[:, cols] @ rot
                a[cols, :] = rot.conj().T @ a[cols, :]
                v[:, cols] = v[:, cols] @ rot
                a[p, q] = a[q, p] = 0.0

    values = np.real(np.diag(a))
    order = np.argsort(values, kind="stable")
    return values[order], v[:, order]


def hermitian_eigenvalues(m, tol: float = DEFAULT_TOL) -> list[float]:
    """Ascending real eigenvalues of a Hermitian matrix (in-repo Jacobi)."""
    values, _ = hermitian_eigh(m, tol)
    return [float(x) for x in values]


@dataclass(frozen=True)
class ValidityReport:
    hermiticity_residual: float
    trace_deviation: float
    min_eigenvalue: float
    tol: float

    @property
    def hermitian(self) -> bool:
        return self.hermiticity_residual <= self.tol

    @property
    def unit_trace(self) -> bool:
        return self.trace_deviation <= self.tol

    @property
    def positive(self) -> bool:
        return self.min_eigenvalue >= -self.tol

    @property
    def passed(self) -> bool:
        return self.hermitian and self.unit_trace and self.positive

    def __bool__(self) -> bool:
        return self.passed


def validate_density(m, tol: float = DEFAULT_TOL) -> ValidityReport:
    """Check Hermiticity, unit trace and positivity; never raises on bad states.

    The eigenvalue check runs on the Hermitian part so that a non-Hermitian
    input still yields a full report.
    """
    a = _square(m)
    herm = hermiticity_residual(a)
    trace_dev = float(abs(np.trace(a) - 1.0))
    sym = 0.5 * (a + a.conj().T)
    min_eig = hermitian_eigenvalues(sym, tol=np.inf)[0]
    return ValidityReport(herm, trace_dev, min_eig, tol)


def purity(m) -> float:
    a = _square(m)
    return float(np.real(np.trace(a @ a)))


def ket(*bits: int) -> np.ndarray:
    """Computational basis column vector ``|b0 b1 ...>``."""
    index = 0
    for b in bits:
        index = 2 * index + int(b)
    v = np.zeros((2 ** len(bits), 1), dtype=np.complex128)
    v[index, 0] = 1.0
    return v


def projector(vec) -> np.ndarray:
    v = np.asarray(vec, dtype=np.complex128).reshape(-1, 1)
    return v @ v.conj().T
