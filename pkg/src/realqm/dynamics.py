"""Time evolution in the real representation, with an independent complex cross-check.

The real-form generator is the block expansion of -i H / hbar.  It is
antisymmetric whenever H is Hermitian, so the flow exp(t G) is orthogonal
and conserves the Euclidean norm.  The reference propagator goes the other
way entirely: diagonalize H with a Hermitian eigensolver and apply phase
factors.  The two routes share no code, which is what makes agreement
between them evidence rather than tautology.

Sign conventions used throughout: the generator for H = hbar * omega * sz
rotates the first amplitude as exp(-i omega t), so for the equal
superposition the relative phase between the two amplitudes advances at
rate 2 omega.  For the sigma_x term some older treatments print the block
with the opposite overall sign; this module applies the uniform rule
realify_op(-i H / hbar) to every term.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .realmap import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    complexify_state,
    is_hermitian,
    realify_op,
)


def pauli_hamiltonian(h0: float, h1: float, h2: float, h3: float) -> np.ndarray:
    """Assemble h0*I + h1*sx + h2*sy + h3*sz as a complex 2x2 Hermitian matrix."""
    return (
        h0 * np.eye(2, dtype=complex)
        + h1 * PAULI_X
        + h2 * PAULI_Y
        + h3 * PAULI_Z
    )


def real_generator(h, hbar: float = 1.0) -> np.ndarray:
    """Real antisymmetric generator realify_op(-i H / hbar) for Hermitian H."""
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h):
        raise ValueError("Hamiltonian must be Hermitian")
    return realify_op(-1j * h / hbar)


def matrix_exp(a) -> np.ndarray:
    """Dense matrix exponential by scaling and squaring around a Taylor core.

    Deliberately self-contained so it can serve as one leg of a two-route
    comparison against the eigensolver propagator.
    """
    a = np.asarray(a)
    if a.ndim != 2 or a.shape[0] != a.shape[1]:
        raise ValueError("matrix_exp expects a square matrix")
    norm = float(np.linalg.norm(a, 1))
    s = 0 if norm == 0 else max(0, int(np.ceil(np.log2(norm))) + 1)
    m = a / (2.0**s)
    n = a.shape[0]
    dtype = m.dtype if np.iscomplexobj(m) else float
    result = np.eye(n, dtype=dtype)
    term = np.eye(n, dtype=dtype)
    # with the scaled norm <= 1/2, seventeen terms leave a remainder below 1e-21
    for k in range(1, 18):
        term = term @ m / k
        result = result + term
    for _ in range(s):
        result = result @ result
    return result


def propagate_exact(g, v0, t: float) -> np.ndarray:
    """Apply exp(t * g) to v0 via the in-house matrix exponential."""
    g = np.asarray(g, dtype=float)
    v0 = np.asarray(v0, dtype=float)
    if g.ndim != 2 or g.shape[0] != g.shape[1] or g.shape[0] != v0.shape[0]:
        raise ValueError("generator must be square and match the state dimension")
    return matrix_exp(t * g) @ v0


def propagate_rk4(g, v0, t: float, dt: float) -> np.ndarray:
    """Integrate dv/dt = g v with classical fourth-order Runge-Kutta steps.

    The step count is ceil(t / dt), so the final time is hit exactly with a
    possibly slightly smaller uniform step.
    """
    if dt <= 0:
        raise ValueError("dt must be positive")
    if t < 0:
        raise ValueError("t must be non-negative")
    g = np.asarray(g, dtype=float)
    v = np.array(v0, dtype=float)
    if t == 0:
        return v
    n_steps = max(1, int(np.ceil(t / dt - 1e-12)))
    h = t / n_steps
    for _ in range(n_steps):
        k1 = g @ v
        k2 = g @ (v + 0.5 * h * k1)
        k3 = g @ (v + 0.5 * h * k2)
        k4 = g @ (v + h * k3)
        v = v + (h / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4)
    return v


def oracle_complex_propagate(h, v0, t: float, hbar: float = 1.0) -> np.ndarray:
    """Reference propagator: diagonalize H and apply exp(-i E t / hbar) phases.

    Complex in, complex out.  Shares no code with matrix_exp on purpose.
    """
    if hbar <= 0:
        raise ValueError("hbar must be positive")
    h = np.asarray(h, dtype=complex)
    if not is_hermitian(h):
        raise ValueError("Hamiltonian must be Hermitian")
    v0 = np.asarray(v0, dtype=complex)
    if h.shape[0] != v0.shape[0]:
        raise ValueError("state dimension must match the Hamiltonian")
    evals, evecs = np.linalg.eigh(h)
    phases = np.exp(-1j * evals * t / hbar)
    return evecs @ (phases * (evecs.conj().T @ v0))


def basis_probabilities(r) -> np.ndarray:
    """Squared moduli per basis state of an interleaved real vector."""
    r = np.asarray(r, dtype=float)
    return r[0::2] ** 2 + r[1::2] ** 2


def relative_phase(r) -> float:
    """arg(a * conj(b)) for a two-level interleaved state (a_r, a_i, b_r, b_i)."""
    c = complexify_state(r)
    if c.shape[0] != 2:
        raise ValueError("relative_phase expects a two-level state")
    return float(np.angle(c[0] * np.conj(c[1])))


@dataclass(frozen=True)
class TrajectoryRecord:
    t: float
    state: np.ndarray
    probs: np.ndarray


def larmor_experiment(omega: float, times) -> list[TrajectoryRecord]:
    """Precession of the equal superposition under H = hbar * omega * sigma_z.

    Each record propagates directly from t = 0 (no step-to-step error
    accumulation).  The populations stay pinned at one half; all the motion
    is in the relative phase, which advances at rate 2 * omega.
    """
    if omega <= 0:
        raise ValueError("omega must be positive")
    times = np.asarray(times, dtype=float)
    if times.ndim != 1 or times.size == 0:
        raise ValueError("times must be a nonempty one-dimensional array")
    if np.any(times < 0) or np.any(np.diff(times) < 0):
        raise ValueError("times must be sorted and non-negative")
    g = real_generator(omega * PAULI_Z)
    v0 = np.array([1.0, 0.0, 1.0, 0.0]) / np.sqrt(2.0)
    records = []
    for t in times:
        state = propagate_exact(g, v0, float(t))
        records.append(TrajectoryRecord(float(t), state, basis_probabilities(state)))
    return records
