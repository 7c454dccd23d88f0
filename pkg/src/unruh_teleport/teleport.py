"""Bennett teleportation over an arbitrary two-qubit channel.

Subsystems are ordered (R, A, B): R carries the message, A and B are Alice's
and Bob's halves of the channel. Alice applies CNOT (R controls A) and a
Hadamard on R, then reads R and A in the computational basis. That readout is
the Bell measurement of the pre-gate frame:

    Phi+ -> 00, Phi- -> 10, Psi+ -> 01, Psi- -> 11   (bits are R, A)
"""

from __future__ import annotations

import logging
from dataclasses import dataclass
from functools import lru_cache
from typing import Mapping

import numpy as np

from .channels import concurrence, make_mes
from .linalg import (
    DEFAULT_TOL,
    LinalgError,
    as_matrix,
    hermitian_eigenvalues,
    hermiticity_residual,
    partial_trace,
    purity,
)
from .unruh import PaperInputState, check_amplitudes, paper_input_state, pure_input_state

log = logging.getLogger(__name__)

IDENTITY = np.eye(2, dtype=np.complex128)
PAULI_X = np.array([[0, 1], [1, 0]], dtype=np.complex128)
PAULI_Y = np.array([[0, -1j], [1j, 0]], dtype=np.complex128)
PAULI_Z = np.array([[1, 0], [0, -1]], dtype=np.complex128)
HADAMARD = np.array([[1, 1], [1, -1]], dtype=np.complex128) / np.sqrt(2)
# control is the more significant qubit
CNOT = np.array(
    [[1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 0, 1], [0, 0, 1, 0]], dtype=np.complex128
)

PAULIS = {"I": IDENTITY, "X": PAULI_X, "Y": PAULI_Y, "Z": PAULI_Z}

BELL_OUTCOMES = ("phi_plus", "phi_minus", "psi_plus", "psi_minus")
OUTCOME_BITS = {"phi_plus": (0, 0), "phi_minus": (1, 0), "psi_plus": (0, 1), "psi_minus": (1, 1)}

PROTOCOL_UNITARY = np.kron(np.kron(HADAMARD, IDENTITY), IDENTITY) @ np.kron(CNOT, IDENTITY)
ORDERING = ("R", "A", "B")

CALIBRATION_TOL = 1e-10
PROBE_STATES = {
    "0": np.array([1, 0], dtype=np.complex128),
    "1": np.array([0, 1], dtype=np.complex128),
    "+": np.array([1, 1], dtype=np.complex128) / np.sqrt(2),
    "+i": np.array([1, 1j], dtype=np.complex128) / np.sqrt(2),
}


class ProtocolError(ValueError):
    pass


@dataclass(frozen=True)
class CorrectionTable:
    """Pauli correction Bob applies for each Bell outcome."""

    names: Mapping[str, str]

    def __post_init__(self):
        missing = [k for k in BELL_OUTCOMES if k not in self.names]
        if missing:
            raise ProtocolError(f"correction table lacks outcomes {missing}")
        unknown = {v for v in self.names.values()} - set(PAULIS)
        if unknown:
            raise ProtocolError(f"unknown Pauli names {sorted(unknown)}")

    def unitary(self, outcome: str) -> np.ndarray:
        return PAULIS[self.names[outcome]]


@dataclass(frozen=True)
class TeleportResult:
    """Everything the protocol produces for one (input, channel) pair.

    ``conditional_states`` are Bob's unnormalized states before correction,
    ``corrected_states`` after it; their traces are the outcome probabilities.
    ``bob_states`` are the corrected states normalized to unit trace (zero
    matrix for an outcome of probability zero).
    """

    probabilities: np.ndarray
    conditional_states: tuple[np.ndarray, ...]
    corrected_states: tuple[np.ndarray, ...]
    bob_states: tuple[np.ndarray, ...]
    fidelities: np.ndarray
    overlaps: np.ndarray

    @property
    def average_fidelity(self) -> float:
        total = float(np.sum(self.probabilities))
        return float(np.sum(self.overlaps) / total)

    @property
    def phi_plus_fidelity(self) -> float:
        return float(self.fidelities[0])

    @property
    def phi_plus_overlap(self) -> float:
        """Unnormalized ``Tr(ref * corrected Phi+ state)``; carries the outcome weight."""
        return float(self.overlaps[0])

    def outcome(self, name: str) -> int:
        return BELL_OUTCOMES.index(name)


def _check_operator(m, dim: int, what: str) -> np.ndarray:
    a = as_matrix(m)
    if a.shape != (dim, dim):
        raise LinalgError(f"{what} must be {dim}x{dim}, got {a.shape}")
    return a


def conditional_bob_states(state, channel) -> tuple[np.ndarray, ...]:
    """Bob's unnormalized states for each Bell outcome, before correction."""
    rho_in = _check_operator(state, 2, "input state")
    chi = _check_operator(channel, 4, "channel")
    total = PROTOCOL_UNITARY @ np.kron(rho_in, chi) @ PROTOCOL_UNITARY.conj().T
    states = []
    for name in BELL_OUTCOMES:
        bits = OUTCOME_BITS[name]
        proj = np.zeros((4, 4), dtype=np.complex128)
        proj[2 * bits[0] + bits[1], 2 * bits[0] + bits[1]] = 1.0
        p = np.kron(proj, IDENTITY)
        states.append(partial_trace(p @ total @ p, ORDERING, keep=("B",)))
    return tuple(states)


def fidelity_overlap(reference, state) -> float:
    """Trace overlap ``Tr(reference @ state)``, real part."""
    a, b = as_matrix(reference), as_matrix(state)
    if a.shape != b.shape:
        raise LinalgError(f"dimension mismatch: {a.shape} vs {b.shape}")
    value = np.trace(a @ b)
    if abs(value.imag) > 1e-12:
        log.warning("fidelity overlap has imaginary residual %.3e", abs(value.imag))
    return float(value.real)


def teleport(state, channel, table: CorrectionTable, reference=None) -> TeleportResult:
    """Run the protocol and score every outcome against ``reference``.

    ``state`` only has to be Hermitian and positive; a trace other than 1 is
    allowed and the outcome probabilities then sum to that trace. The
    reference defaults to ``state`` itself.
    """
    rho_in = _check_operator(state, 2, "input state")
    if hermiticity_residual(rho_in) > DEFAULT_TOL:
        raise LinalgError("input state is not Hermitian")
    if hermitian_eigenvalues(rho_in)[0] < -DEFAULT_TOL:
        raise LinalgError("input state is not positive semidefinite")
    ref = rho_in if reference is None else _check_operator(reference, 2, "reference")

    raw = conditional_bob_states(rho_in, channel)
    corrected, normalized, probs, fids, overlaps = [], [], [], [], []
    for name, sigma in zip(BELL_OUTCOMES, raw):
        u = table.unitary(name)
        fixed = u @ sigma @ u.conj().T
        prob = float(np.real(np.trace(fixed)))
        overlap = fidelity_overlap(ref, fixed)
        corrected.append(fixed)
        probs.append(prob)
        overlaps.append(overlap)
        if prob > 1e-300:
            normalized.append(fixed / prob)
            fids.append(overlap / prob)
        else:
            normalized.append(np.zeros((2, 2), dtype=np.complex128))
            fids.append(0.0)
    return TeleportResult(
        np.array(probs), raw, tuple(corrected), tuple(normalized),
        np.array(fids), np.array(overlaps),
    )


def _pauli_fixes(channel, outcome: str, name: str) -> bool:
    idx = BELL_OUTCOMES.index(outcome)
    u = PAULIS[name]
    for vec in PROBE_STATES.values():
        ref = np.outer(vec, vec.conj())
        sigma = conditional_bob_states(ref, channel)[idx]
        fixed = u @ sigma @ u.conj().T
        prob = np.real(np.trace(fixed))
        if prob <= 0 or fidelity_overlap(ref, fixed) / prob < 1 - CALIBRATION_TOL:
            return False
    return True


def build_correction_table(channel_at_zero) -> CorrectionTable:
    """Find, per outcome, the first Pauli (I, X, Y, Z) that restores every probe.

    Global phases are irrelevant since corrections act by conjugation, so
    ``XZ`` is found as ``Y``.
    """
    chi = _check_operator(channel_at_zero, 4, "channel")
    if abs(purity(chi) - 1.0) > CALIBRATION_TOL or concurrence(chi) < 1 - CALIBRATION_TOL:
        raise ProtocolError("channel is not maximally entangled; no exact Pauli frame exists")
    names = {}
    for outcome in BELL_OUTCOMES:
        match = next((n for n in PAULIS if _pauli_fixes(chi, outcome, n)), None)
        if match is None:
            raise ProtocolError(f"no Pauli correction restores outcome {outcome}")
        names[outcome] = match
    return CorrectionTable(names)


@lru_cache(maxsize=1)
def singlet_correction_table() -> CorrectionTable:
    """Table calibrated on the zero-acceleration singlet channel."""
    return build_correction_table(make_mes())


def mu_coefficients(b1: float, b2: float, channel) -> tuple[complex, complex, complex, complex]:
    """Published closed form for Bob's Phi+-conditioned state.

    ``mu00 = ((b1+b2)(e11+e33) + (b1-b2)(e13+e31)) / 4`` and likewise for the
    other three, with ``e`` the 1-indexed channel elements.
    """
    chi = _check_operator(channel, 4, "channel")

    def e(i, j):
        return complex(chi[i - 1, j - 1])

    s, d = b1 + b2, b1 - b2
    mu00 = 0.25 * (s * (e(1, 1) + e(3, 3)) + d * (e(1, 3) + e(3, 1)))
    mu01 = 0.25 * (s * (e(1, 2) + e(3, 4)) + d * (e(1, 4) + e(3, 2)))
    mu10 = 0.25 * (s * (e(2, 1) + e(4, 3)) + d * (e(2, 3) + e(4, 1)))
    mu11 = 0.25 * (s * (e(2, 2) + e(4, 4)) + d * (e(2, 4) + e(4, 2)))
    return mu00, mu01, mu10, mu11


def fidelity_paper_accel(
    alpha, beta, r3, channel, renormalize: bool = False, table: CorrectionTable | None = None
) -> float:
    """Published accelerated-input fidelity ``b1*mu00 + b2*mu11``.

    With ``renormalize`` the raw value is divided by the engine's Phi+
    probability for the published input state, i.e. by
    ``Tr(input) * P(Phi+ | input)``.
    """
    inp = paper_input_state(alpha, beta, r3)
    mu00, _, _, mu11 = mu_coefficients(inp.b1, inp.b2, channel)
    raw = float(np.real(inp.b1 * mu00 + inp.b2 * mu11))
    if not renormalize:
        return raw
    result = teleport(inp.matrix, channel, table or singlet_correction_table())
    return raw / float(result.probabilities[0])


def teleport_paper_input(
    inp: PaperInputState, channel, table: CorrectionTable | None = None
) -> TeleportResult:
    return teleport(inp.matrix, channel, table or singlet_correction_table())


def teleport_nonaccelerated(alpha, beta, channel, table: CorrectionTable | None = None) -> TeleportResult:
    """Teleport the pure state ``alpha|0> + beta|1>`` itself."""
    alpha, beta = check_amplitudes(alpha, beta)
    return teleport(pure_input_state(alpha, beta), channel, table or singlet_correction_table())
