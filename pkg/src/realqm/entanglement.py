"""Two-qubit reading of one real-encoded qubit: conditional split, reduced state, entropy.

In the doubled layout (a_r, a_i, b_r, b_i) a single-qubit state factors as
the pair (a_r, a_i) attached to the first basis state plus (b_r, b_i)
attached to the second.  Read as a genuine two-qubit state of an amplitude
qubit and a basis qubit, it is generically entangled.  The reduced state of
the amplitude qubit has determinant (a_r b_i - a_i b_r)^2, which is
Im(conj(a) b)^2: zero exactly when one global phase can make the state
all-real (a product state in this reading), and one quarter at maximal
entanglement, where the entropy reaches ln 2.

Local-phase bookkeeping on two physical qubits needs one doubling per
factor (16 reals): that keeps i applied to the left factor distinguishable
from i applied to the right one, which the single global doubling (8 reals)
cannot do.  The price is that the pairwise coupling kron(J_A, J_B) squares
to plus the identity, so its one-parameter group is hyperbolic
(cosh/sinh), and it commutes with every local pair of realified unitaries:
it generates correlation bookkeeping, not entangling dynamics.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .realmap import is_unitary, j_operator, realify_op, realify_state

ZERO_WEIGHT = 1e-15


def _as_qubit_state(r, tol: float = 1e-9) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if r.shape != (4,):
        raise ValueError("expected a four-component interleaved qubit state")
    if abs(float(np.linalg.norm(r)) - 1.0) > tol:
        raise ValueError("state must be normalized")
    return r


@dataclass(frozen=True)
class ConditionalDecomposition:
    weight_a: float
    unit_a: np.ndarray | None
    weight_b: float
    unit_b: np.ndarray | None
    defined_a: bool
    defined_b: bool

    def reconstruct(self) -> np.ndarray:
        out = np.zeros(4)
        if self.defined_a:
            out[0:2] = self.weight_a * self.unit_a
        if self.defined_b:
            out[2:4] = self.weight_b * self.unit_b
        return out


def conditional_decomposition(r) -> ConditionalDecomposition:
    """Split (a_r, a_i, b_r, b_i) into weighted unit pairs per basis branch.

    A branch with weight below ZERO_WEIGHT has no defined unit direction
    and its defined flag is False.
    """
    r = _as_qubit_state(r)
    weight_a = float(np.hypot(r[0], r[1]))
    weight_b = float(np.hypot(r[2], r[3]))
    defined_a = weight_a >= ZERO_WEIGHT
    defined_b = weight_b >= ZERO_WEIGHT
    unit_a = r[0:2] / weight_a if defined_a else None
    unit_b = r[2:4] / weight_b if defined_b else None
    return ConditionalDecomposition(weight_a, unit_a, weight_b, unit_b, defined_a, defined_b)


def reduced_density_first(r) -> np.ndarray:
    """Reduced state of the amplitude qubit (the real-imag pair factor)."""
    r = _as_qubit_state(r)
    ar, ai, br, bi = (float(x) for x in r)
    off = ar * ai + br * bi
    return np.array([[ar * ar + br * br, off], [off, ai * ai + bi * bi]])


class EntanglementClass(Enum):
    PRODUCT = "product"
    PARTIAL = "partial"
    MAXIMAL = "maximal"


@dataclass(frozen=True)
class EntanglementReport:
    rho1: np.ndarray
    det_rho1: float
    r1: float
    r2: float
    entropy_nats: float
    kind: EntanglementClass


def _det_closed_form(r: np.ndarray) -> float:
    return float((r[0] * r[3] - r[1] * r[2]) ** 2)


def classify_entanglement(r, tol: float = 1e-9) -> EntanglementClass:
    """Sort by the reduced-state determinant: 0 product, 1/4 maximal, else partial."""
    r = _as_qubit_state(r)
    det = _det_closed_form(r)
    if det <= tol:
        return EntanglementClass.PRODUCT
    if abs(det - 0.25) <= tol:
        return EntanglementClass.MAXIMAL
    return EntanglementClass.PARTIAL


def entanglement_entropy(r, tol: float = 1e-9) -> EntanglementReport:
    """Entropy in nats of the amplitude-basis split of one doubled qubit.

    Uses the closed-form determinant; cross-checks it against the matrix
    determinant of the reduced state as an internal consistency guard.
    """
    r = _as_qubit_state(r, tol)
    rho1 = reduced_density_first(r)
    det = _det_closed_form(r)
    det_matrix = float(np.linalg.det(rho1))
    if abs(det - det_matrix) > 1e-9:
        raise ArithmeticError("reduced-state determinant mismatch")
    det_clipped = min(max(det, 0.0), 0.25)
    gap = np.sqrt(max(0.0, 1.0 - 4.0 * det_clipped))
    r1 = (1.0 + gap) / 2.0
    r2 = 1.0 - r1
    entropy = 0.0
    for lam in (r1, r2):
        if lam > 0.0:
            entropy -= lam * np.log(lam)
    return EntanglementReport(rho1, det, r1, r2, float(entropy), classify_entanglement(r, tol))


def encode_local(psi, phi, tol: float = 1e-9) -> np.ndarray:
    """Doubled form of each factor separately: kron of the two interleaved states.

    Sixteen reals for two qubits.  Distinguishes i applied to the left
    factor from i applied to the right, at Euclidean distance sqrt(2) for
    any normalized inputs.
    """
    rp = realify_state(psi)
    rq = realify_state(phi)
    if abs(float(np.linalg.norm(rp)) - 1.0) > tol or abs(float(np.linalg.norm(rq)) - 1.0) > tol:
        raise ValueError("both factors must be normalized")
    return np.kron(rp, rq)


def encode_global(psi, phi, tol: float = 1e-9) -> np.ndarray:
    """Doubled form of the joint state: one interleaving of kron(psi, phi).

    Eight reals for two qubits.  Collapses the left-i versus right-i
    distinction that encode_local keeps.
    """
    psi = np.asarray(psi, dtype=complex)
    phi = np.asarray(phi, dtype=complex)
    if abs(float(np.linalg.norm(psi)) - 1.0) > tol or abs(float(np.linalg.norm(phi)) - 1.0) > tol:
        raise ValueError("both factors must be normalized")
    return realify_state(np.kron(psi, phi))


def coupling_generator() -> np.ndarray:
    """kron(J_A, J_B) on two locally doubled qubits; squares to plus the identity."""
    j = j_operator(2)
    return np.kron(j, j)


def coupling_propagator(theta: float) -> np.ndarray:
    """exp(theta * kron(J_A, J_B)) in closed form: cosh(theta) I + sinh(theta) kron(J_A, J_B).

    Hyperbolic, not circular, because the generator squares to plus the
    identity.
    """
    c = coupling_generator()
    return np.cosh(theta) * np.eye(16) + np.sinh(theta) * c


def coupling_commutation_check(theta: float, ua, ub) -> float:
    """Frobenius norm of [coupling_propagator(theta), realify(UA) kron realify(UB)].

    Zero for every pair of unitaries: each factor's J commutes with every
    realified operator on that factor, so the coupling cannot entangle.
    """
    ua = np.asarray(ua, dtype=complex)
    ub = np.asarray(ub, dtype=complex)
    if ua.shape != (2, 2) or ub.shape != (2, 2):
        raise ValueError("expected single-qubit operators")
    if not is_unitary(ua, 1e-9) or not is_unitary(ub, 1e-9):
        raise ValueError("both operators must be unitary")
    local = np.kron(realify_op(ua), realify_op(ub))
    prop = coupling_propagator(theta)
    return float(np.linalg.norm(prop @ local - local @ prop))
