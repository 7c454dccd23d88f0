import math

import numpy as np
import pytest

from unruh_teleport.channels import (
    ChannelParam,
    concurrence,
    make_mes,
    make_pure_channel,
    spin_flip,
)
from unruh_teleport.linalg import LinalgError, purity, validate_density


def printed_pattern(p):
    """The published 4x4 sign pattern, with the (2, 1) entry set to -p (Hermitian)."""
    q = math.sqrt(1 - p * p)
    return 0.25 * np.array([
        [1 - q, -p, p, -(1 - q)],
        [-p, 1 + q, -(1 + q), p],
        [p, -(1 + q), 1 + q, -p],
        [-(1 - q), p, -p, 1 - q],
    ])


def random_unitary(rng):
    z = rng.normal(size=(2, 2)) + 1j * rng.normal(size=(2, 2))
    q, r = np.linalg.qr(z)
    return q * (np.diag(r) / np.abs(np.diag(r)))


def test_param_validation():
    assert ChannelParam(0.6).q == pytest.approx(0.8)
    for bad in (-0.1, 1.1, float("nan")):
        with pytest.raises(ValueError):
            ChannelParam(bad)
    with pytest.raises(ValueError):
        make_pure_channel(1.5)


def test_p0_is_singlet():
    rho = make_pure_channel(0.0)
    expect = np.zeros((4, 4))
    expect[1, 1] = expect[2, 2] = 0.5
    expect[1, 2] = expect[2, 1] = -0.5
    assert np.allclose(rho, expect, atol=1e-15)
    assert np.allclose(make_mes(), expect, atol=1e-15)


def test_p1_is_product_of_quarters():
    rho = make_pure_channel(1.0)
    assert np.allclose(np.abs(rho), 0.25)
    assert np.allclose(rho, printed_pattern(1.0))
    assert concurrence(rho) == pytest.approx(0.0, abs=1e-12)


@pytest.mark.parametrize("p", [0.0, 0.1, 0.3, 0.6, 0.9, 1.0])
def test_matches_published_pattern(p):
    assert np.allclose(make_pure_channel(p), printed_pattern(p), atol=1e-15)


def test_p06_brute_force():
    q = 0.8
    x, y = math.sqrt(1 - q) / 2, math.sqrt(1 + q) / 2
    psi = np.array([-x, y, -y, x])
    rho = make_pure_channel(0.6)
    assert np.allclose(rho, np.outer(psi, psi), atol=1e-15)
    # C = 2|ad - bc| on the amplitudes
    c_analytic = 2 * abs(psi[0] * psi[3] - psi[1] * psi[2])
    assert c_analytic == pytest.approx(q)
    assert concurrence(rho) == pytest.approx(0.8, abs=1e-12)


def test_mes_purity_and_concurrence():
    assert purity(make_mes()) == pytest.approx(1.0, abs=1e-15)
    assert concurrence(make_mes()) == pytest.approx(1.0, abs=1e-12)


@pytest.mark.parametrize("p", [0.2, 0.5, 0.8])
def test_concurrence_closed_form(p):
    assert concurrence(make_pure_channel(p)) == pytest.approx(math.sqrt(1 - p * p), abs=1e-12)


def test_grid_validity_purity_concurrence():
    for p in np.linspace(0, 1, 101):
        rho = make_pure_channel(p)
        assert validate_density(rho, 1e-10).passed
        assert abs(purity(rho) - 1) <= 1e-10
        assert abs(concurrence(rho) - math.sqrt(1 - p * p)) <= 1e-9


def test_concurrence_local_unitary_invariance():
    rng = np.random.default_rng(7)
    for _ in range(20):
        g = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        rho = g @ g.conj().T
        rho /= np.trace(rho)
        u = np.kron(random_unitary(rng), random_unitary(rng))
        assert concurrence(u @ rho @ u.conj().T) == pytest.approx(concurrence(rho), abs=1e-9)
    for p in (0.0, 0.4, 0.9):
        u = np.kron(random_unitary(rng), random_unitary(rng))
        rho = make_pure_channel(p)
        assert concurrence(u @ rho @ u.conj().T) == pytest.approx(math.sqrt(1 - p * p), abs=1e-9)


def test_concurrence_matches_non_hermitian_route():
    """Full-rank states against sqrt(eig(rho * rho~)) from LAPACK's general solver."""
    rng = np.random.default_rng(8)
    for _ in range(10):
        a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
        v = rng.normal(size=4) + 1j * rng.normal(size=4)
        rho = 0.1 * a @ a.conj().T + 5 * np.outer(v, v.conj())
        rho /= np.trace(rho)
        lam = np.sort(np.sqrt(np.abs(np.linalg.eigvals(rho @ spin_flip(rho)))))[::-1]
        expect = max(0.0, lam[0] - lam[1] - lam[2] - lam[3])
        assert concurrence(rho) == pytest.approx(expect, abs=1e-8)


def test_werner_threshold():
    # Werner state w|Psi-><Psi-| + (1-w) I/4 has C = max(0, (3w - 1)/2)
    for w in (0.2, 1 / 3, 0.5, 0.9):
        rho = w * make_mes() + (1 - w) * np.eye(4) / 4
        assert concurrence(rho) == pytest.approx(max(0.0, (3 * w - 1) / 2), abs=1e-12)


def test_concurrence_rejects_invalid_state():
    with pytest.raises(LinalgError):
        concurrence(np.diag([1.2, -0.2, 0, 0]))
    with pytest.raises(LinalgError):
        concurrence(np.eye(2) / 2)
