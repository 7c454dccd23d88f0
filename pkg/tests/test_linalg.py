import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from unruh_teleport import linalg
from unruh_teleport.linalg import (
    ConvergenceError,
    LinalgError,
    NotHermitianError,
    QubitOrdering,
    dagger,
    hermitian_eigenvalues,
    kron,
    matmul,
    partial_trace,
    validate_density,
)
from unruh_teleport.unruh import unruh_isometry

I2 = np.eye(2)
X = np.array([[0, 1], [1, 0]])
H = np.array([[1, 1], [1, -1]]) / math.sqrt(2)
PHI_PLUS = np.array([1, 0, 0, 1]) / math.sqrt(2)

seeds = st.integers(min_value=0, max_value=2**32 - 1)


def random_hermitian(rng, n):
    a = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    return a + a.conj().T


def random_density(rng, n):
    g = rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))
    rho = g @ g.conj().T
    return rho / np.trace(rho)


def test_kron_examples():
    assert np.allclose(kron(I2, I2), np.eye(4))
    assert np.allclose(kron(np.diag([1, 0]), np.diag([1, 0])), np.diag([1, 0, 0, 0]))
    xx = kron(X, X)
    assert np.allclose(xx, np.fliplr(np.eye(4)))
    e0 = np.array([1, 0, 0, 0])
    assert np.argmax(np.abs(xx @ e0)) == 3


def test_kron_index_convention():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(2, 2))
    b = rng.normal(size=(4, 4))
    out = kron(a, b)
    for i, j, k, l in np.ndindex(2, 2, 4, 4):
        assert out[i * 4 + k, j * 4 + l] == pytest.approx(a[i, j] * b[k, l])


def test_kron_rejects_beyond_16():
    with pytest.raises(LinalgError):
        kron(np.eye(8), np.eye(4))


def test_leftmost_label_is_most_significant():
    # |1>_A |0>_B sits at index 2
    v = kron(np.array([[0], [1]]), np.array([[1], [0]]))
    assert np.argmax(np.abs(v)) == 2
    assert np.allclose(linalg.ket(1, 0).ravel(), v.ravel())


def test_matmul_examples():
    rng = np.random.default_rng(1)
    m = rng.normal(size=(4, 4))
    assert np.allclose(matmul(np.eye(4), m), m)
    assert np.allclose(matmul(X, X), I2)
    assert np.allclose(matmul(H, H), I2)
    with pytest.raises(LinalgError):
        matmul(np.eye(2), np.eye(4))


def test_dagger_examples():
    rng = np.random.default_rng(2)
    m = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    assert np.allclose(dagger(np.eye(4)), np.eye(4))
    assert np.allclose(dagger(dagger(m)), m)
    for r in (0.1, 0.5, math.pi / 4):
        v = unruh_isometry(r)
        assert np.allclose(dagger(v) @ v, I2, atol=1e-15)


def test_as_matrix_rejects_nan():
    with pytest.raises(LinalgError):
        linalg.as_matrix([[1.0, np.nan], [0.0, 1.0]])


def test_partial_trace_product_state():
    rng = np.random.default_rng(3)
    rho, sigma = random_density(rng, 2), 3.0 * random_density(rng, 4)
    out = partial_trace(kron(rho, sigma), ("a", "b", "c"), keep=("a",))
    assert np.allclose(out, rho * np.trace(sigma), atol=1e-12)


def test_partial_trace_bell_state():
    bell = np.outer(PHI_PLUS, PHI_PLUS)
    for keep in ("A", "B"):
        assert np.allclose(partial_trace(bell, ("A", "B"), keep=(keep,)), I2 / 2)


def test_partial_trace_unruh_vacuum():
    r = 0.37
    v = unruh_isometry(r)
    out = partial_trace(v @ np.diag([1, 0]) @ v.conj().T, ("I", "II"), keep=("I",))
    assert np.allclose(out, np.diag([math.cos(r) ** 2, math.sin(r) ** 2]), atol=1e-15)


def test_partial_trace_keeps_original_order():
    rng = np.random.default_rng(4)
    a, b, c = (random_density(rng, 2) for _ in range(3))
    full = kron(kron(a, b), c)
    out = partial_trace(full, ("a", "b", "c"), keep=("c", "a"))
    assert np.allclose(out, kron(a, c), atol=1e-14)


def test_partial_trace_against_explicit_sum():
    rng = np.random.default_rng(5)
    m = random_hermitian(rng, 8)
    out = partial_trace(m, ("x", "y", "z"), keep=("x", "z"))
    expect = np.zeros((4, 4), dtype=complex)
    for x, z, x2, z2, y in np.ndindex(2, 2, 2, 2, 2):
        expect[2 * x + z, 2 * x2 + z2] += m[4 * x + 2 * y + z, 4 * x2 + 2 * y + z2]
    assert np.allclose(out, expect, atol=1e-13)


@pytest.mark.parametrize("keep", [(), ("q",), ("a", "zz")])
def test_partial_trace_bad_keep(keep):
    with pytest.raises(LinalgError):
        partial_trace(np.eye(4) / 4, ("a", "b"), keep=keep)


def test_partial_trace_dimension_mismatch():
    with pytest.raises(LinalgError):
        partial_trace(np.eye(4) / 4, ("a", "b", "c"), keep=("a",))


def test_ordering_rejects_duplicates():
    with pytest.raises(LinalgError):
        QubitOrdering(("a", "a"))


@settings(max_examples=50, deadline=None)
@given(seed=seeds, n=st.integers(min_value=1, max_value=4))
def test_partial_trace_preserves_trace(seed, n):
    rng = np.random.default_rng(seed)
    m = random_hermitian(rng, 2**n)
    labels = [f"q{i}" for i in range(n)]
    keep = [lab for lab, flag in zip(labels, rng.integers(0, 2, size=n)) if flag] or labels[:1]
    out = partial_trace(m, labels, keep=keep)
    assert abs(np.trace(out) - np.trace(m)) <= 1e-12 * max(1.0, np.abs(m).max())


@settings(max_examples=50, deadline=None)
@given(seed=seeds)
def test_kron_partial_trace_round_trip(seed):
    rng = np.random.default_rng(seed)
    rho, sigma = random_density(rng, 2), random_density(rng, 4)
    out = partial_trace(kron(rho, sigma), ("l", "m", "n"), keep=("l",))
    assert np.max(np.abs(out - rho)) <= 1e-12


def test_eigenvalue_examples():
    assert hermitian_eigenvalues(np.diag([0.25, 0.75])) == pytest.approx([0.25, 0.75], abs=1e-15)
    vals = hermitian_eigenvalues(np.outer(PHI_PLUS, PHI_PLUS))
    assert vals == pytest.approx([0, 0, 0, 1], abs=1e-14)


@pytest.mark.parametrize("n", [2, 4, 8, 16])
def test_eigenvalues_match_lapack(n):
    rng = np.random.default_rng(n)
    m = random_hermitian(rng, n)
    ours = np.array(hermitian_eigenvalues(m))
    assert np.all(np.diff(ours) >= 0)
    assert np.allclose(ours, np.linalg.eigvalsh(m), atol=1e-12 * np.abs(m).max() * n)


def test_eigenvectors_diagonalize():
    rng = np.random.default_rng(9)
    m = random_hermitian(rng, 8)
    w, v = linalg.hermitian_eigh(m)
    assert np.allclose(v.conj().T @ v, np.eye(8), atol=1e-12)
    assert np.allclose(v @ np.diag(w) @ v.conj().T, m, atol=1e-11)


def test_degenerate_spectrum():
    rng = np.random.default_rng(10)
    q, _ = np.linalg.qr(rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4)))
    m = q @ np.diag([1.0, 1.0, 1.0, -2.0]) @ q.conj().T
    assert hermitian_eigenvalues(m) == pytest.approx([-2, 1, 1, 1], abs=1e-12)


@settings(max_examples=40, deadline=None)
@given(seed=seeds, k=st.integers(min_value=1, max_value=4))
def test_eigenvalue_trace_identities(seed, k):
    rng = np.random.default_rng(seed)
    m = random_hermitian(rng, 2**k)
    vals = np.array(hermitian_eigenvalues(m))
    assert abs(vals.sum() - np.trace(m).real) <= 1e-10 * max(1.0, np.abs(m).max())
    assert abs((vals**2).sum() - np.trace(m @ m).real) <= 1e-9 * max(1.0, np.abs(m).max() ** 2)


def test_eigenvalues_reject_non_hermitian():
    with pytest.raises(NotHermitianError):
        hermitian_eigenvalues(np.array([[0.0, 1.0], [0.0, 0.0]]))


def test_eigenvalues_report_non_convergence(monkeypatch):
    monkeypatch.setattr(linalg, "JACOBI_MAX_SWEEPS", 0)
    with pytest.raises(ConvergenceError) as info:
        hermitian_eigenvalues(np.array([[1.0, 0.5], [0.5, 2.0]]))
    assert info.value.sweeps == 0
    assert info.value.residual == pytest.approx(0.5)


def test_validate_density_examples():
    assert validate_density(I2 / 2).passed
    bad = validate_density(np.diag([1.2, -0.2]))
    assert not bad.passed
    assert bad.unit_trace and bad.hermitian and not bad.positive
    assert bad.min_eigenvalue == pytest.approx(-0.2)


def test_validate_density_literal_input_fails_on_trace():
    # alpha = beta = 1/sqrt(2), r3 = pi/6 evaluated literally: diag(0.375, 1.125)
    r = math.pi / 6
    b1 = 0.5 * math.cos(r) ** 2
    b2 = 0.5 * (math.sin(r) + 1) ** 2
    report = validate_density(np.diag([b1, b2]))
    assert not report.passed
    assert not report.unit_trace
    assert report.trace_deviation == pytest.approx(0.5)


def test_validate_density_non_hermitian_still_reports():
    report = validate_density(np.array([[0.5, 1.0], [0.0, 0.5]]))
    assert not report.hermitian
    assert report.hermiticity_residual == pytest.approx(1.0)
