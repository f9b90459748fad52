"""Finite-dimensional spaces with a plus-minus-one diagonal metric.

Three escalating toys live here.  A single hyperbolic qubit whose second
basis state has negative self-overlap, normalized along cosh/sinh orbits.
A pair of such qubits with an exchange constraint whose kernel carries a
positive metric, so two indefinite qubits conspire to one ordinary qubit.
And a two-mode truncated ladder system where the scalar mode's creation
operator is defined as the metric adjoint of its annihilator, which flips
the usual commutator sign on that mode without any hand-inserted minus
sign.  On the constrained states of the last toy, emission of a null ghost
pair changes no physical overlap.

Truncation discipline: ladder identities are only claimed on the guarded
subspace (per-mode occupation at most cutoff - 2) where the missing top
rung cannot leak in.  Operator identities on that subspace are measured in
the spectral norm, the operator norm seen by guarded states.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

DEFAULT_PHYSICAL_TOL = 1e-10


@dataclass(frozen=True)
class IndefiniteSpace:
    signature: np.ndarray
    labels: tuple[str, ...] | None = None

    def __post_init__(self):
        sig = np.asarray(self.signature, dtype=float)
        if sig.ndim != 1 or sig.size == 0 or not np.all(np.abs(sig) == 1.0):
            raise ValueError("metric signature must be a nonempty vector of +1/-1")
        object.__setattr__(self, "signature", sig)
        if self.labels is not None and len(self.labels) != sig.size:
            raise ValueError("label count must match the dimension")

    @property
    def dim(self) -> int:
        return int(self.signature.size)

    @property
    def metric(self) -> np.ndarray:
        return np.diag(self.signature)


def indefinite_qubit() -> IndefiniteSpace:
    """Two-level space with metric diag(+1, -1)."""
    return IndefiniteSpace(np.array([1.0, -1.0]), ("0", "1"))


def eta_inner(v, w, space: IndefiniteSpace):
    """Indefinite inner product conj(v) . G . w for the space's diagonal metric G."""
    v = np.asarray(v)
    w = np.asarray(w)
    if v.shape != (space.dim,) or w.shape != (space.dim,):
        raise ValueError("vector dimensions must match the space")
    val = np.vdot(v, space.signature * w)
    if np.iscomplexobj(v) or np.iscomplexobj(w):
        return complex(val)
    return float(val)


def boost_normalize(x: float) -> np.ndarray:
    """(cosh x, sinh x): the unit-eta-norm ray through (1, 0) at rapidity x.

    Ordinary normalization fails on the indefinite qubit; the difference of
    squares, not the sum, is the conserved quantity.
    """
    return np.array([np.cosh(x), np.sinh(x)])


SIGMA_RAISE = np.array([[0.0, 0.0], [1.0, 0.0]])
SIGMA_LOWER = SIGMA_RAISE.T


def pair_constraint_operator() -> np.ndarray:
    """Exchange coupling raise(x)lower + lower(x)raise on two indefinite qubits.

    Its kernel is spanned by the aligned states |00> and |11>.  On that
    kernel the product metric diag(+1, -1, -1, +1) restricts to the
    identity: the minus signs cancel pairwise and an ordinary qubit
    remains.
    """
    return np.kron(SIGMA_RAISE, SIGMA_LOWER) + np.kron(SIGMA_LOWER, SIGMA_RAISE)


def two_qubit_pair_space() -> IndefiniteSpace:
    """Product of two indefinite qubits, metric diag(+1, -1, -1, +1)."""
    sig = np.kron(np.array([1.0, -1.0]), np.array([1.0, -1.0]))
    return IndefiniteSpace(sig, ("00", "01", "10", "11"))


def pair_constraint_residual(v) -> float:
    """Norm of the exchange constraint applied to a two-qubit vector."""
    v = np.asarray(v)
    if v.shape != (4,):
        raise ValueError("expected a four-component two-qubit vector")
    return float(np.linalg.norm(pair_constraint_operator() @ v))


def metric_adjoint(x, signature) -> np.ndarray:
    """G . transpose(x) . G for the diagonal metric G = diag(signature).

    An involution; reduces to the plain transpose when the signature is all
    plus ones.
    """
    sig = np.asarray(signature, dtype=float)
    x = np.asarray(x, dtype=float)
    if x.shape != (sig.size, sig.size):
        raise ValueError("operator shape must match the signature")
    return (sig[:, None] * x.T) * sig[None, :]


@dataclass(frozen=True)
class FockToy:
    """Two truncated ladder modes |n3, n0> with metric (-1)^(n0).

    a3 lowers the standard mode, a0 the wrong-sign one.  The daggered
    operators are metric adjoints, so a0_dag carries the sign flip that
    produces [a0, a0_dag] = -1 on guarded states.  Basis index is
    n3 * cutoff + n0.
    """

    cutoff: int
    a3: np.ndarray
    a0: np.ndarray
    a3_dag: np.ndarray
    a0_dag: np.ndarray
    metric_signature: np.ndarray
    guard_max: int

    @property
    def dim(self) -> int:
        return self.cutoff**2

    @property
    def space(self) -> IndefiniteSpace:
        return IndefiniteSpace(self.metric_signature)


def build_fock_toy(cutoff: int = 8) -> FockToy:
    """Construct the two-mode toy at the given per-mode truncation (at least 4)."""
    if cutoff < 4:
        raise ValueError("cutoff must be at least 4")
    ladder = np.diag(np.sqrt(np.arange(1.0, cutoff)), k=1)
    eye = np.eye(cutoff)
    a3 = np.kron(ladder, eye)
    a0 = np.kron(eye, ladder)
    signature = np.kron(np.ones(cutoff), (-1.0) ** np.arange(cutoff))
    return FockToy(
        cutoff=cutoff,
        a3=a3,
        a0=a0,
        a3_dag=metric_adjoint(a3, signature),
        a0_dag=metric_adjoint(a0, signature),
        metric_signature=signature,
        guard_max=cutoff - 2,
    )


def fock_basis_state(toy: FockToy, n3: int, n0: int) -> np.ndarray:
    """Unit basis vector with n3 standard and n0 wrong-sign excitations."""
    if not (0 <= n3 < toy.cutoff and 0 <= n0 < toy.cutoff):
        raise ValueError("occupation numbers must lie below the cutoff")
    v = np.zeros(toy.dim)
    v[n3 * toy.cutoff + n0] = 1.0
    return v


def vacuum(toy: FockToy) -> np.ndarray:
    return fock_basis_state(toy, 0, 0)


def guard_projector(toy: FockToy) -> np.ndarray:
    """Diagonal projector onto per-mode occupations at most guard_max."""
    keep = (np.arange(toy.cutoff) <= toy.guard_max).astype(float)
    return np.diag(np.kron(keep, keep))


def check_guard(toy: FockToy, psi, tol: float = 1e-12) -> np.ndarray:
    """Reject states whose support touches the top two rungs of either mode."""
    psi = np.asarray(psi, dtype=float)
    if psi.shape != (toy.dim,):
        raise ValueError("state dimension must match the toy space")
    amps = psi.reshape(toy.cutoff, toy.cutoff)
    exposed = np.arange(toy.cutoff) > toy.guard_max
    if np.any(np.abs(amps[exposed, :]) > tol) or np.any(np.abs(amps[:, exposed]) > tol):
        raise ValueError("state support touches the truncation guard")
    return psi


def gb_constraint_residual(toy: FockToy, psi) -> float:
    """Norm of (a3 - a0) psi; zero on states with matched excitation in both modes."""
    psi = check_guard(toy, psi)
    return float(np.linalg.norm((toy.a3 - toy.a0) @ psi))


def ghost_emit(toy: FockToy, psi, lam: float, tol: float = DEFAULT_PHYSICAL_TOL) -> np.ndarray:
    """Apply 1 + lam * (a3_dag - a0_dag) to a constrained state.

    The added pair has zero eta-norm and zero eta-overlap with everything
    physical, so the output is again constrained and all physical overlaps
    are untouched.  Non-physical input is rejected.
    """
    psi = check_guard(toy, psi)
    scale = max(1.0, float(np.linalg.norm(psi)))
    if gb_constraint_residual(toy, psi) > tol * scale:
        raise ValueError("ghost emission requires a state satisfying the constraint")
    return psi + lam * ((toy.a3_dag - toy.a0_dag) @ psi)


def overlap_invariance_check(toy: FockToy, psi, psi1, lam: float, tol: float = DEFAULT_PHYSICAL_TOL) -> float:
    """Absolute change of eta(psi, psi1) when psi undergoes ghost emission.

    Both inputs must satisfy the constraint; the return value should sit at
    the rounding floor.
    """
    psi1 = check_guard(toy, psi1)
    scale = max(1.0, float(np.linalg.norm(psi1)))
    if gb_constraint_residual(toy, psi1) > tol * scale:
        raise ValueError("overlap invariance is only claimed between constrained states")
    emitted = ghost_emit(toy, psi, lam, tol)
    space = toy.space
    before = eta_inner(psi, psi1, space)
    after = eta_inner(emitted, psi1, space)
    return float(abs(after - before))
