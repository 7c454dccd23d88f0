"""The one-parameter family of pure two-qubit channels and their entanglement."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .linalg import (
    DEFAULT_TOL,
    LinalgError,
    as_matrix,
    hermitian_eigh,
    validate_density,
)

PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
YY = np.kron(PAULI_Y, PAULI_Y)


@dataclass(frozen=True)
class ChannelParam:
    """Channel parameter ``p`` in [0, 1]; ``q = sqrt(1 - p**2)``.

    ``p = 0`` is the Bell singlet, ``p = 1`` a product state.
    """

    p: float

    def __post_init__(self):
        p = float(self.p)
        if not np.isfinite(p) or p < 0.0 or p > 1.0:
            raise ValueError(f"channel parameter p must lie in [0, 1], got {self.p!r}")
        object.__setattr__(self, "p", p)

    @property
    def q(self) -> float:
        return float(np.sqrt(max(0.0, 1.0 - self.p * self.p)))


def _param(param) -> ChannelParam:
    return param if isinstance(param, ChannelParam) else ChannelParam(param)


def pure_channel_vector(param: ChannelParam | float) -> np.ndarray:
    """State vector ``(-x, y, -y, x)`` with ``x = sqrt(1-q)/2``, ``y = sqrt(1+q)/2``."""
    q = _param(param).q
    x = np.sqrt(1.0 - q) / 2.0
    y = np.sqrt(1.0 + q) / 2.0
    return np.array([-x, y, -y, x], dtype=np.complex128)


def make_pure_channel(param: ChannelParam | float) -> np.ndarray:
    """Density matrix of the initial shared channel.

    Built as ``|psi><psi|`` from :func:`pure_channel_vector`. Entrywise this is
    the familiar 1/4-scaled sign pattern with ``(1 -+ q)`` on the corners and
    centre block and ``+-p`` elsewhere; the ``(2, 1)`` element is ``-p/4``,
    which is what Hermiticity forces given ``(1, 2) = -p/4``.
    """
    psi = pure_channel_vector(param)
    return np.outer(psi, psi.conj())


def make_mes() -> np.ndarray:
    """The maximally entangled member of the family (the singlet)."""
    return make_pure_channel(0.0)


def spin_flip(rho) -> np.ndarray:
    """Wootters spin-flipped state ``(Y⊗Y) conj(rho) (Y⊗Y)``."""
    m = as_matrix(rho)
    return YY @ m.conj() @ YY


def concurrence(rho, tol: float = DEFAULT_TOL) -> float:
    """Wootters concurrence of a two-qubit density matrix.

    With ``rho = sum_i |psi_i><psi_i|`` (subnormalized eigenvectors), the
    decreasing square roots of the eigenvalues of ``rho * spin_flip(rho)`` are
    the singular values of ``tau_ij = psi_i^T (Y⊗Y) psi_j``. Those are read off
    the Hermitian dilation ``[[0, tau], [tau^H, 0]]`` so no square root of a
    near-zero eigenvalue is ever taken.
    """
    m = as_matrix(rho)
    if m.shape != (4, 4):
        raise LinalgError(f"concurrence needs a 4x4 state, got {m.shape}")
    report = validate_density(m, tol)
    if not report.passed:
        raise LinalgError(f"not a valid density matrix: {report}")

    w, vecs = hermitian_eigh(m, tol)
    keep = w > 1e-14 * max(1.0, float(w[-1]))
    psi = vecs[:, keep] * np.sqrt(w[keep])
    tau = psi.T @ YY @ psi
    k = tau.shape[0]
    dilation = np.zeros((2 * k, 2 * k), dtype=np.complex128)
    dilation[:k, k:] = tau
    dilation[k:, :k] = tau.conj().T
    values, _ = hermitian_eigh(dilation, tol)
    lam = np.zeros(4)
    lam[:k] = np.clip(values[::-1][:k], 0.0, None)
    return float(max(0.0, lam[0] - lam[1] - lam[2] - lam[3]))
