"""Quantum teleportation over uniformly accelerated two-qubit channels."""

from .channels import ChannelParam, concurrence, make_mes, make_pure_channel
from .linalg import (
    ConvergenceError,
    QubitOrdering,
    dagger,
    hermitian_eigenvalues,
    kron,
    matmul,
    partial_trace,
    validate_density,
)
from .sweep import SweepScenario, run_audit, run_sweep, run_trend_report
from .teleport import (
    CorrectionTable,
    TeleportResult,
    build_correction_table,
    fidelity_overlap,
    fidelity_paper_accel,
    mu_coefficients,
    teleport,
    teleport_nonaccelerated,
)
from .unruh import (
    AccelerationSpec,
    Rapidity,
    UnphysicalRapidityError,
    accel_to_r,
    apply_unruh_single,
    apply_unruh_two,
    paper_channel_elements,
    paper_input_state,
    unruh_isometry,
)

__version__ = "0.1.0"
