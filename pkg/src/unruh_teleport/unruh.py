"""Unruh mode transformation for qubits carried by uniformly accelerated observers.

A Minkowski qubit maps into a (region I, region II) Rindler pair::

    |0>  ->  cos r |0_I 0_II> + sin r |1_I 1_II>
    |1>  ->  |1_I 0_II>

with ``tan r = exp(-pi * omega * c / a)``. Region II is causally disconnected
and always traced out. Besides this canonical construction the module keeps
verbatim evaluators of the published closed forms for the accelerated channel
and the accelerated input state, so that they can be audited against it.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from .channels import ChannelParam, make_pure_channel
from .linalg import QubitOrdering, as_matrix, kron, partial_trace

SPEED_OF_LIGHT = 299_792_458.0
R_PHYSICAL_MAX = math.pi / 4
R_EDGE_SLACK = 1e-12


class UnphysicalRapidityError(ValueError):
    """Raised for r outside [0, pi/4] when no override was requested."""


@dataclass(frozen=True)
class Rapidity:
    """Acceleration parameter ``r`` in radians.

    ``physical=True`` restricts ``r`` to ``[0, pi/4]``, the range reachable from
    ``tan r = exp(-pi omega c / a)``. ``physical=False`` admits ``[0, pi/2)``;
    only figure replicas that quote r = 0.8 need it.
    """

    r: float
    physical: bool = True

    def __post_init__(self):
        r = float(self.r)
        if not math.isfinite(r) or r < 0.0:
            raise ValueError(f"rapidity must be a finite non-negative number, got {self.r!r}")
        if r >= math.pi / 2:
            raise ValueError(f"rapidity must be below pi/2, got {r}")
        if self.physical and r > R_PHYSICAL_MAX + R_EDGE_SLACK:
            raise UnphysicalRapidityError(
                f"r = {r} exceeds pi/4; pass allow_unphysical to override"
            )
        object.__setattr__(self, "r", r)

    def __float__(self) -> float:
        return self.r


def rapidity(r, allow_unphysical: bool = False) -> Rapidity:
    """Coerce a float or :class:`Rapidity`.

    An existing ``Rapidity`` is returned unchanged. A float above pi/4 becomes
    an unphysical rapidity when ``allow_unphysical`` is set, else it raises.
    """
    if isinstance(r, Rapidity):
        return r
    r = float(r)
    return Rapidity(r, physical=not (allow_unphysical and r > R_PHYSICAL_MAX + R_EDGE_SLACK))


@dataclass(frozen=True)
class AccelerationSpec:
    a: float
    omega: float
    c: float = SPEED_OF_LIGHT

    def __post_init__(self):
        if not self.a > 0:
            raise ValueError(f"acceleration must be positive, got {self.a!r}")
        if not self.omega > 0:
            raise ValueError(f"mode frequency must be positive, got {self.omega!r}")


def accel_to_r(spec: AccelerationSpec) -> Rapidity:
    return Rapidity(math.atan(math.exp(-math.pi * spec.omega * spec.c / spec.a)))


def unruh_isometry(r) -> np.ndarray:
    """4x2 column map on ordering (qubit_I, qubit_II)."""
    r = rapidity(r).r
    v = np.zeros((4, 2), dtype=np.complex128)
    v[0, 0] = math.cos(r)
    v[3, 0] = math.sin(r)
    v[2, 1] = 1.0
    return v


def apply_unruh_single(rho, r) -> np.ndarray:
    """Region-I state ``Tr_II(V rho V^dagger)`` of one accelerated qubit."""
    m = as_matrix(rho)
    if m.shape != (2, 2):
        raise ValueError(f"expected a 2x2 qubit state, got {m.shape}")
    v = unruh_isometry(r)
    return partial_trace(v @ m @ v.conj().T, ("I", "II"), keep=("I",))


TWO_QUBIT_ORDERING = QubitOrdering(("A_I", "A_II", "B_I", "B_II"))


def apply_unruh_two(rho, r1, r2) -> np.ndarray:
    """Accelerate both halves of a two-qubit state and keep region I.

    The 16x16 intermediate lives on (A_I, A_II, B_I, B_II); A_II and B_II are
    traced out.
    """
    m = as_matrix(rho)
    if m.shape != (4, 4):
        raise ValueError(f"expected a 4x4 two-qubit state, got {m.shape}")
    v = kron(unruh_isometry(r1), unruh_isometry(r2))
    # kron(V1, V2) orders its output as (A_I, A_II, B_I, B_II) already
    big = v @ m @ v.conj().T
    return partial_trace(big, TWO_QUBIT_ORDERING, keep=("A_I", "B_I"))


@dataclass(frozen=True)
class PaperInputState:
    """Accelerated input qubit in its published diagonal closed form.

    ``matrix`` is ``diag(b1, b2)`` with ``b1 = |alpha|^2 cos^2 r3`` and
    ``b2 = |alpha sin r3 + beta|^2``. Its trace is generally not 1; when
    ``normalized`` is true the matrix has been divided by ``raw_trace``.
    """

    matrix: np.ndarray
    b1: float
    b2: float
    raw_trace: float
    normalized: bool

    @property
    def trace(self) -> float:
        return float(np.real(np.trace(self.matrix)))

    @property
    def unit_trace(self) -> bool:
        return abs(self.trace - 1.0) <= 1e-12


def check_amplitudes(alpha, beta, tol: float = 1e-12) -> tuple[complex, complex]:
    alpha, beta = complex(alpha), complex(beta)
    norm = abs(alpha) ** 2 + abs(beta) ** 2
    if abs(norm - 1.0) > tol:
        raise ValueError(f"amplitudes not normalized: |alpha|^2 + |beta|^2 = {norm}")
    return alpha, beta


def paper_input_state(alpha, beta, r3, normalize: bool = False) -> PaperInputState:
    alpha, beta = check_amplitudes(alpha, beta)
    r = rapidity(r3).r
    b1 = abs(alpha) ** 2 * math.cos(r) ** 2
    b2 = abs(alpha * math.sin(r) + beta) ** 2
    m = np.diag([b1, b2]).astype(np.complex128)
    raw = b1 + b2
    if normalize:
        m = m / raw
    return PaperInputState(m, b1, b2, raw, normalize)


def pure_input_state(alpha, beta) -> np.ndarray:
    alpha, beta = check_amplitudes(alpha, beta)
    psi = np.array([alpha, beta], dtype=np.complex128)
    return np.outer(psi, psi.conj())


def accelerated_input_state(alpha, beta, r3) -> np.ndarray:
    """Canonical counterpart of :func:`paper_input_state`."""
    return apply_unruh_single(pure_input_state(alpha, beta), r3)


# -- published channel elements ---------------------------------------------

# Elements the printed closed form defines only by reference to another one.
_PRINTED_ALIASES = {(3, 1): (1, 3), (3, 2): (2, 3), (4, 1): (1, 4), (4, 2): (2, 4)}
# Never printed at all; filled from its mirror so the grid is complete.
_UNPRINTED = {(4, 3): (3, 4)}


def _printed_elements(p: float, q: float, r1: float, r2: float) -> dict[tuple[int, int], float]:
    c1, c2 = math.cos(r1), math.cos(r2)
    c21, c22 = math.cos(2 * r1), math.cos(2 * r2)
    e = {
        (1, 1): 0.25 * ((1 - q) / 4 * (1 + 2 * c21) + (3 - q) / 4 * c22),
        (1, 2): -p / 8 * c2 * (3 - c21),
        (1, 3): p / 8 * c1 * (1 + c22),
        (1, 4): -(1 - q) / 4 * c1 * c2,
        (2, 1): -p / 8 * c22 * (3 - c21),
        (2, 2): 0.25 * (q - 1 + 2 * (q + 1) * c21 + (q + 3) * c22),
        (2, 3): -(1 + q) / 4 * c1 * c2,
        (2, 4): p / 8 * c1 * (3 - c22),
        (3, 3): 0.25 * ((1 + q) / 2 * c21 + (3 + q) / 4 * (1 + c22)),
        (3, 4): -p / 8 * c1 * c2 * (1 + c21),
        (4, 4): 0.25 * ((9 - q) / 4 - (1 + q) / 2 * c21 - (3 + q) / 4 * c22),
    }
    for dst, src in {**_PRINTED_ALIASES, **_UNPRINTED}.items():
        e[dst] = e[src]
    return e


def printed_channel_matrix(param, r1, r2) -> np.ndarray:
    """The published accelerated-channel elements as a real 4x4 array (0-indexed)."""
    param = param if isinstance(param, ChannelParam) else ChannelParam(param)
    e = _printed_elements(param.p, param.q, rapidity(r1).r, rapidity(r2).r)
    out = np.zeros((4, 4))
    for (i, j), value in e.items():
        out[i - 1, j - 1] = value
    return out


# Generic probe points used to decide whether two printed formulas are the
# same function, independently of the requested parameters.
STRUCTURAL_PROBES = ((0.5, 0.3, 0.6), (0.8, 0.7, 0.2), (0.25, 0.1, 0.75))
AUDIT_TOL = 1e-10


@dataclass(frozen=True)
class HermiticityFinding:
    element: tuple[int, int]
    mirror: tuple[int, int]
    value: float
    mirror_value: float
    residual: float
    structural_residual: float

    @property
    def flagged(self) -> bool:
        return self.residual > AUDIT_TOL or self.structural_residual > AUDIT_TOL


@dataclass(frozen=True)
class ReductionFinding:
    element: tuple[int, int]
    printed_at_zero: float
    initial_value: float

    @property
    def difference(self) -> float:
        return self.printed_at_zero - self.initial_value


@dataclass(frozen=True)
class ChannelAudit:
    p: float
    r1: float
    r2: float
    printed: np.ndarray
    canonical: np.ndarray
    hermiticity: tuple[HermiticityFinding, ...]
    reduction_failures: tuple[ReductionFinding, ...]
    unprinted: tuple[tuple[int, int], ...] = field(default=tuple(_UNPRINTED))

    @property
    def diff(self) -> np.ndarray:
        return self.printed - self.canonical

    @property
    def hermiticity_violations(self) -> tuple[HermiticityFinding, ...]:
        return tuple(f for f in self.hermiticity if f.flagged)

    def element_diff(self, i: int, j: int) -> complex:
        """1-indexed printed-minus-canonical difference."""
        return complex(self.diff[i - 1, j - 1])


def paper_channel_elements(param, r1, r2) -> tuple[np.ndarray, ChannelAudit]:
    """Evaluate the published channel elements and audit them.

    The audit lists (i) Hermiticity mismatches between printed mirror pairs,
    both at the requested point and across :data:`STRUCTURAL_PROBES`, (ii)
    elements that fail to reduce to the initial channel at r1 = r2 = 0, and
    (iii) the full printed-minus-canonical difference grid.
    """
    param = param if isinstance(param, ChannelParam) else ChannelParam(param)
    r1, r2 = rapidity(r1), rapidity(r2)
    printed = printed_channel_matrix(param, r1, r2)
    canonical = apply_unruh_two(make_pure_channel(param), r1, r2)

    probes = [
        _printed_elements(p, ChannelParam(p).q, a, b) for p, a, b in STRUCTURAL_PROBES
    ]
    findings = []
    for i in range(1, 5):
        for j in range(i + 1, 5):
            here = printed[i - 1, j - 1], printed[j - 1, i - 1]
            structural = max(abs(e[(i, j)] - e[(j, i)]) for e in probes)
            findings.append(
                HermiticityFinding(
                    (i, j), (j, i), float(here[0]), float(here[1]),
                    float(abs(here[0] - here[1])), float(structural),
                )
            )

    at_zero = printed_channel_matrix(param, 0.0, 0.0)
    initial = np.real(make_pure_channel(param))
    failures = tuple(
        ReductionFinding((i + 1, j + 1), float(at_zero[i, j]), float(initial[i, j]))
        for i in range(4)
        for j in range(4)
        if abs(at_zero[i, j] - initial[i, j]) > AUDIT_TOL
    )
    audit = ChannelAudit(
        param.p, r1.r, r2.r, printed, canonical, tuple(findings), failures
    )
    return printed, audit
