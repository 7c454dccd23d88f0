"""Self-checks backing the ``check`` subcommand and the acceptance tests.

Each check returns a :class:`CheckResult`; none of them raises on failure.
"""

from __future__ import annotations

import math
import tempfile
import time
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .channels import concurrence, make_mes, make_pure_channel
from .linalg import purity, validate_density
from .sweep import (
    REPLICAS,
    p_sweep_scenarios,
    render_audit,
    run_audit,
    run_replica,
    run_trend_report,
    trend_preset,
)
from .teleport import conditional_bob_states, singlet_correction_table, teleport
from .unruh import R_PHYSICAL_MAX, accelerated_input_state, apply_unruh_two

SEED = 20240611


@dataclass(frozen=True)
class CheckResult:
    number: int
    name: str
    passed: bool
    detail: str

    def line(self) -> str:
        return f"[{'PASS' if self.passed else 'FAIL'}] {self.number}. {self.name}: {self.detail}"


def random_pure_state(rng) -> np.ndarray:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    v /= np.linalg.norm(v)
    return np.outer(v, v.conj())


def random_amplitudes(rng) -> tuple[complex, complex]:
    v = rng.normal(size=2) + 1j * rng.normal(size=2)
    v /= np.linalg.norm(v)
    return complex(v[0]), complex(v[1])


def random_density(rng, dim: int, rank: int | None = None) -> np.ndarray:
    g = rng.normal(size=(dim, rank or dim)) + 1j * rng.normal(size=(dim, rank or dim))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


# Bell vectors on (R, A), written out by hand.
_S = 1 / math.sqrt(2)
BELL_VECTORS = {
    "phi_plus": {(0, 0): _S, (1, 1): _S},
    "phi_minus": {(0, 0): _S, (1, 1): -_S},
    "psi_plus": {(0, 1): _S, (1, 0): _S},
    "psi_minus": {(0, 1): _S, (1, 0): -_S},
}


def direct_summation_bob_states(state, channel) -> list[np.ndarray]:
    """Bob's unnormalized post-measurement states by explicit index sums.

    Builds the 8x8 joint state element by element and contracts it with the
    hand-written Bell vectors; no Kronecker products, gates or partial traces.
    """
    joint = np.zeros((8, 8), dtype=np.complex128)
    for r in range(2):
        for a in range(2):
            for b in range(2):
                for r2 in range(2):
                    for a2 in range(2):
                        for b2 in range(2):
                            joint[4 * r + 2 * a + b, 4 * r2 + 2 * a2 + b2] = (
                                state[r, r2] * channel[2 * a + b, 2 * a2 + b2]
                            )
    out = []
    for name in ("phi_plus", "phi_minus", "psi_plus", "psi_minus"):
        vec = BELL_VECTORS[name]
        sigma = np.zeros((2, 2), dtype=np.complex128)
        for b in range(2):
            for b2 in range(2):
                total = 0j
                for (r, a), c in vec.items():
                    for (r2, a2), c2 in vec.items():
                        total += np.conj(c) * joint[4 * r + 2 * a + b, 4 * r2 + 2 * a2 + b2] * c2
                sigma[b, b2] = total
        out.append(sigma)
    return out


def check_validity_suite() -> CheckResult:
    start = time.perf_counter()
    grid = np.linspace(0.0, R_PHYSICAL_MAX, 10)
    worst = 0.0
    failures = 0
    for p in (0.0, 0.3, 0.7, 1.0):
        rho = make_pure_channel(p)
        for r1 in grid:
            for r2 in grid:
                rep = validate_density(apply_unruh_two(rho, r1, r2), 1e-10)
                worst = max(worst, rep.hermiticity_residual, rep.trace_deviation,
                            -rep.min_eigenvalue)
                failures += not rep.passed
    elapsed = time.perf_counter() - start
    ok = failures == 0 and elapsed < 5.0
    return CheckResult(1, "validity suite", ok,
                       f"400 channels, {failures} invalid, worst residual {worst:.2e}, "
                       f"{elapsed:.2f}s (limit 5s)")


def check_purity_concurrence() -> CheckResult:
    start = time.perf_counter()
    worst_purity = worst_conc = 0.0
    for p in np.linspace(0.0, 1.0, 101):
        rho = make_pure_channel(p)
        worst_purity = max(worst_purity, abs(purity(rho) - 1.0))
        worst_conc = max(worst_conc, abs(concurrence(rho) - math.sqrt(1 - p * p)))
    elapsed = time.perf_counter() - start
    ok = worst_purity <= 1e-9 and worst_conc <= 1e-9 and elapsed < 1.0
    return CheckResult(2, "purity and concurrence oracle", ok,
                       f"max |Tr(rho^2)-1| {worst_purity:.2e}, max |C-sqrt(1-p^2)| "
                       f"{worst_conc:.2e}, {elapsed:.2f}s (limit 1s)")


def check_calibration(n: int = 20) -> CheckResult:
    rng = np.random.default_rng(SEED)
    table = singlet_correction_table()
    channel = apply_unruh_two(make_mes(), 0.0, 0.0)
    min_fid, worst_prob = 1.0, 0.0
    for _ in range(n):
        alpha, beta = random_amplitudes(rng)
        state = accelerated_input_state(alpha, beta, 0.0)
        res = teleport(state, channel, table)
        min_fid = min(min_fid, float(np.min(res.fidelities)))
        worst_prob = max(worst_prob, float(np.max(np.abs(res.probabilities - 0.25))))
    ok = min_fid >= 1 - 1e-10 and worst_prob <= 1e-10
    return CheckResult(3, "calibration identity", ok,
                       f"{n} pure inputs, min outcome fidelity 1-{1 - min_fid:.2e}, "
                       f"max |p-1/4| {worst_prob:.2e}")


def check_engine_oracle(n: int = 25) -> CheckResult:
    rng = np.random.default_rng(SEED + 1)
    worst = 0.0
    for _ in range(n):
        state = random_density(rng, 2)
        channel = random_density(rng, 4)
        engine = conditional_bob_states(state, channel)
        oracle = direct_summation_bob_states(state, channel)
        worst = max(worst, max(float(np.max(np.abs(e - o))) for e, o in zip(engine, oracle)))
    return CheckResult(4, "engine vs direct-summation oracle", worst <= 1e-12,
                       f"{n} random pairs, max entrywise difference {worst:.2e}")


def check_maximally_mixed(n: int = 10) -> CheckResult:
    rng = np.random.default_rng(SEED + 2)
    channel = np.eye(4, dtype=np.complex128) / 4
    worst = max(
        abs(teleport(random_pure_state(rng), channel, singlet_correction_table()).average_fidelity - 0.5)
        for _ in range(n)
    )
    return CheckResult(5, "maximally mixed channel", worst <= 1e-10,
                       f"{n} pure inputs, max |F_avg - 1/2| {worst:.2e}")


def check_audit() -> CheckResult:
    record = run_audit(0.0, 0.0, 0.0)
    text = render_audit(record)
    again = render_audit(run_audit(0.0, 0.0, 0.0))
    rho11 = [f for f in record["reduction_failures"] if f["element"] == [1, 1]]
    rho11_ok = bool(rho11) and abs(rho11[0]["printed_at_zero"] - 0.125) <= 1e-15 \
        and abs(rho11[0]["initial"]) <= 1e-15
    herm = [f for f in record["hermiticity"] if f["element"] == [1, 2]]
    herm_ok = bool(herm) and herm[0]["flagged"]
    ok = rho11_ok and herm_ok and text == again and text.startswith("audit-schema-version:")
    return CheckResult(6, "audit regression", ok,
                       f"rho11 flagged={rho11_ok}, rho12/rho21 flagged={herm_ok}, "
                       f"stable={text == again}")


def check_trends() -> CheckResult:
    p_report = run_trend_report(p_sweep_scenarios())
    verdicts = p_report.find("fidelity-vs-p", mode="canonical", column="fidelity_average")
    a_ok = bool(verdicts) and all(v.verdict == "holds" for v in verdicts)
    fig2 = trend_preset("fig2")
    fig2_report = run_trend_report(fig2)
    first = fig2_report.render()
    second = run_trend_report(fig2).render()
    b_modes = {v.mode for v in fig2_report.find("fidelity-vs-r3")}
    b_ok = b_modes == {"canonical", "paper-literal"}
    recorded = "; ".join(
        f"{v.mode}/{v.column}={v.verdict}"
        for v in fig2_report.find("fidelity-vs-r3")
    )
    ok = a_ok and b_ok and first == second
    return CheckResult(7, "trend reproduction", ok,
                       f"(a) F_avg non-increasing in p at r=0.7: {a_ok}; "
                       f"(b) r3 verdicts rendered for both modes: {b_ok} [{recorded}]; "
                       f"deterministic={first == second}")


def replica_bytes(outdir, steps: int = 101) -> dict[str, bytes]:
    files = {}
    for name in REPLICAS:
        for path in run_replica(name, outdir, steps):
            files[path.name] = path.read_bytes()
    return files


def check_determinism(steps: int = 101) -> CheckResult:
    start = time.perf_counter()
    with tempfile.TemporaryDirectory() as d1, tempfile.TemporaryDirectory() as d2:
        first = replica_bytes(Path(d1), steps)
        second = replica_bytes(Path(d2), steps)
    elapsed = time.perf_counter() - start
    same = first == second
    ok = same and elapsed < 30.0
    return CheckResult(8, "replica determinism", ok,
                       f"{len(first)} CSV files byte-identical={same}, two full runs "
                       f"{elapsed:.2f}s (limit 30s)")


ALL_CHECKS = (
    check_validity_suite,
    check_purity_concurrence,
    check_calibration,
    check_engine_oracle,
    check_maximally_mixed,
    check_audit,
    check_trends,
    check_determinism,
)


def run_all() -> list[CheckResult]:
    return [check() for check in ALL_CHECKS]
