import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from conftest import random_hermitian, random_state
from realqm import dynamics, realmap

# Reference 4x4 generator blocks, one per term of the two-level
# Hamiltonian.  The uniform rule realify_op(-i H) reproduces three of them
# exactly; the x-term block circulates with the opposite overall sign, so
# the rule gives minus BLOCK_X_ALT (see README, sign conventions).
BLOCK_IDENTITY = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, 1.0],
        [0.0, 0.0, -1.0, 0.0],
    ]
)
BLOCK_X_ALT = np.array(
    [
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
        [0.0, -1.0, 0.0, 0.0],
        [1.0, 0.0, 0.0, 0.0],
    ]
)
BLOCK_Y = np.array(
    [
        [0.0, 0.0, -1.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
        [1.0, 0.0, 0.0, 0.0],
        [0.0, 1.0, 0.0, 0.0],
    ]
)
BLOCK_Z = np.array(
    [
        [0.0, 1.0, 0.0, 0.0],
        [-1.0, 0.0, 0.0, 0.0],
        [0.0, 0.0, 0.0, -1.0],
        [0.0, 0.0, 1.0, 0.0],
    ]
)


def test_pauli_hamiltonian_assembly():
    h = dynamics.pauli_hamiltonian(0.5, -1.0, 0.25, 2.0)
    expected = np.array([[0.5 + 2.0, -1.0 - 0.25j], [-1.0 + 0.25j, 0.5 - 2.0]])
    assert_allclose(h, expected, atol=0)
    assert realmap.is_hermitian(h)


def test_generator_blocks_match_references():
    assert_array_equal(dynamics.real_generator(np.eye(2)), BLOCK_IDENTITY)
    assert_array_equal(dynamics.real_generator(realmap.PAULI_Y), BLOCK_Y)
    assert_array_equal(dynamics.real_generator(realmap.PAULI_Z), BLOCK_Z)
    # documented sign flag: the uniform rule gives minus the circulated block
    assert_array_equal(dynamics.real_generator(realmap.PAULI_X), -BLOCK_X_ALT)


def test_generator_is_antisymmetric():
    rng = np.random.default_rng(3)
    for _ in range(20):
        n = int(rng.integers(1, 6))
        g = dynamics.real_generator(random_hermitian(rng, n))
        assert_allclose(g.T, -g, atol=1e-15)


def test_generator_rejects_bad_input():
    with pytest.raises(ValueError):
        dynamics.real_generator(np.array([[0.0, 1.0], [0.0, 0.0]]))
    with pytest.raises(ValueError):
        dynamics.real_generator(np.eye(2), hbar=0.0)


def test_hbar_scaling():
    g1 = dynamics.real_generator(realmap.PAULI_Z, hbar=1.0)
    g2 = dynamics.real_generator(realmap.PAULI_Z, hbar=2.0)
    assert_allclose(g2, g1 / 2.0, atol=0)


def test_matrix_exp_identity_and_zero():
    assert_array_equal(dynamics.matrix_exp(np.zeros((3, 3))), np.eye(3))
    assert_allclose(dynamics.matrix_exp(np.eye(2)), np.e * np.eye(2), atol=1e-14)


def test_matrix_exp_rotation_closed_form():
    for theta in (0.1, 1.0, -2.5, 12.0):
        expected = np.array(
            [[np.cos(theta), -np.sin(theta)], [np.sin(theta), np.cos(theta)]]
        )
        assert_allclose(dynamics.matrix_exp(theta * realmap.J2), expected, atol=1e-13)


def test_matrix_exp_diagonal():
    d = np.diag([0.3, -1.7, 4.0])
    assert_allclose(dynamics.matrix_exp(d), np.diag(np.exp(np.diag(d))), rtol=1e-13)


def test_matrix_exp_rejects_nonsquare():
    with pytest.raises(ValueError):
        dynamics.matrix_exp(np.zeros((2, 3)))


def test_propagation_conserves_norm():
    rng = np.random.default_rng(9)
    for _ in range(20):
        n = int(rng.integers(1, 6))
        g = dynamics.real_generator(random_hermitian(rng, n))
        v0 = realmap.realify_state(random_state(rng, n))
        v = dynamics.propagate_exact(g, v0, float(rng.uniform(0.0, 10.0)))
        assert abs(np.linalg.norm(v) - 1.0) <= 1e-10


def test_propagation_matches_complex_oracle():
    """Real-route flow against the eigensolver route; the two share no code."""
    rng = np.random.default_rng(21)
    for _ in range(25):
        n = int(rng.integers(1, 7))
        h = random_hermitian(rng, n)
        g = dynamics.real_generator(h)
        psi0 = random_state(rng, n)
        t = float(rng.uniform(0.0, 20.0))
        real_route = dynamics.propagate_exact(g, realmap.realify_state(psi0), t)
        oracle = realmap.realify_state(dynamics.oracle_complex_propagate(h, psi0, t))
        assert np.max(np.abs(real_route - oracle)) <= 1e-9


def test_oracle_phases_on_diagonal_hamiltonian():
    omega = 1.3
    h = omega * np.asarray(realmap.PAULI_Z)
    psi0 = np.array([1.0, 1.0], dtype=complex) / np.sqrt(2)
    for t in (0.0, 0.4, 2.0):
        psi = dynamics.oracle_complex_propagate(h, psi0, t)
        expected = np.array([np.exp(-1j * omega * t), np.exp(1j * omega * t)]) / np.sqrt(2)
        assert_allclose(psi, expected, atol=1e-12)


def test_oracle_rejects_mismatched_state():
    with pytest.raises(ValueError):
        dynamics.oracle_complex_propagate(np.eye(2), np.ones(3, dtype=complex), 1.0)


def test_rk4_matches_exact_propagator():
    g = dynamics.real_generator(dynamics.pauli_hamiltonian(0.2, 0.4, -0.3, 0.9))
    v0 = np.array([1.0, 0.0, 0.0, 0.0])
    exact = dynamics.propagate_exact(g, v0, 5.0)
    stepped = dynamics.propagate_rk4(g, v0, 5.0, 1e-3)
    assert np.linalg.norm(exact - stepped) <= 1e-8


def test_rk4_fourth_order_convergence():
    g = dynamics.real_generator(np.asarray(realmap.PAULI_Z))
    v0 = np.array([1.0, 0.0, 1.0, 0.0]) / np.sqrt(2)
    t = 2.0 * np.pi
    exact = dynamics.propagate_exact(g, v0, t)
    err_coarse = np.linalg.norm(dynamics.propagate_rk4(g, v0, t, 0.05) - exact)
    err_fine = np.linalg.norm(dynamics.propagate_rk4(g, v0, t, 0.025) - exact)
    # halving the step should cut the error by about 2**4
    assert 12.0 < err_coarse / err_fine < 20.0


def test_rk4_validation():
    g = np.zeros((2, 2))
    with pytest.raises(ValueError):
        dynamics.propagate_rk4(g, np.zeros(2), 1.0, 0.0)
    with pytest.raises(ValueError):
        dynamics.propagate_rk4(g, np.zeros(2), -1.0, 0.1)
    assert_array_equal(dynamics.propagate_rk4(g, np.array([1.0, 2.0]), 0.0, 0.1), [1.0, 2.0])


def test_basis_probabilities():
    assert_allclose(
        dynamics.basis_probabilities([0.6, 0.0, 0.0, 0.8]), [0.36, 0.64], atol=1e-15
    )


def test_larmor_quarter_period_state():
    omega = 1.0
    records = dynamics.larmor_experiment(omega, [0.0, np.pi / 2.0])
    s = 1.0 / np.sqrt(2)
    assert_allclose(records[0].state, [s, 0.0, s, 0.0], atol=1e-15)
    assert_allclose(records[1].state, [0.0, -s, 0.0, s], atol=1e-12)


def test_larmor_populations_stay_balanced():
    records = dynamics.larmor_experiment(0.7, np.linspace(0.0, 12.0, 200))
    for rec in records:
        assert_allclose(rec.probs, [0.5, 0.5], atol=1e-10)


def test_larmor_relative_phase_rate():
    omega = 1.3
    times = np.linspace(0.0, 6.0, 601)
    records = dynamics.larmor_experiment(omega, times)
    phases = np.unwrap([dynamics.relative_phase(rec.state) for rec in records])
    slope = np.polyfit(times, phases, 1)[0]
    assert abs(abs(slope) - 2.0 * omega) <= 1e-9


def test_larmor_validation():
    with pytest.raises(ValueError):
        dynamics.larmor_experiment(0.0, [0.0, 1.0])
    with pytest.raises(ValueError):
        dynamics.larmor_experiment(1.0, [1.0, 0.5])
    with pytest.raises(ValueError):
        dynamics.larmor_experiment(1.0, [-1.0, 0.5])
