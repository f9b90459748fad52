"""Classify real-block operators by how they sit relative to the complex structure.

Every real operator O on the doubled space splits exactly into a piece that
commutes with J (complex-linear; the real image of some complex matrix) and
a piece that anticommutes with J (anti-linear; complex conjugation and the
universal state-flip live here).  Admitting only the commuting piece is the
rule that cuts the enlarged real theory back down to ordinary quantum
mechanics, and `audit` enforces that rule numerically.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum

import numpy as np

from .realmap import (
    PAULI_X,
    PAULI_Y,
    PAULI_Z,
    _as_real_operator,
    complexify_op,
    j_operator,
    realify_op,
)


class Verdict(Enum):
    PHYSICAL = "physical"
    ANTILINEAR = "antilinear"
    EXTENDED = "extended"


@dataclass(frozen=True)
class AuditReport:
    linear_residual: float
    antilinear_residual: float
    verdict: Verdict
    recovered: np.ndarray | None

    # linear_residual is the Frobenius norm of the J-anticommuting part
    # (the obstruction to being complex-linear); antilinear_residual is the
    # norm of the J-commuting part.  recovered is the complex matrix whose
    # real image reproduces the operator, present only for PHYSICAL.


def _j_sandwich(op: np.ndarray) -> np.ndarray:
    j = j_operator(op.shape[0] // 2)
    return j @ op @ j


def linear_part(op) -> np.ndarray:
    """J-commuting component (O - J O J) / 2."""
    op = _as_real_operator(op)
    return (op - _j_sandwich(op)) / 2.0


def antilinear_part(op) -> np.ndarray:
    """J-anticommuting component (O + J O J) / 2; complements linear_part."""
    op = _as_real_operator(op)
    return (op + _j_sandwich(op)) / 2.0


def audit(op, tol: float = 1e-9) -> AuditReport:
    """Classify a real operator as physical, anti-linear, or extended.

    tol is relative to the Frobenius norm of the operator.  PHYSICAL wins
    when both residuals vanish (the zero operator).
    """
    op = _as_real_operator(op)
    lin = linear_part(op)
    anti = op - lin
    linear_residual = float(np.linalg.norm(anti))
    antilinear_residual = float(np.linalg.norm(lin))
    threshold = tol * float(np.linalg.norm(op))
    if linear_residual <= threshold:
        verdict = Verdict.PHYSICAL
    elif antilinear_residual <= threshold:
        verdict = Verdict.ANTILINEAR
    else:
        verdict = Verdict.EXTENDED
    recovered = complexify_op(lin) if verdict is Verdict.PHYSICAL else None
    return AuditReport(linear_residual, antilinear_residual, verdict, recovered)


def universal_not() -> np.ndarray:
    """Real 4x4 map sending a|0> + b|1> to conj(b)|0> - conj(a)|1>.

    Takes every qubit state to an orthogonal one.  Anti-linear in the
    complex picture, so it exists only in the enlarged real space; audit
    classifies it ANTILINEAR.
    """
    return np.array(
        [
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
            [-1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ]
    )


def conjugation_op(n: int) -> np.ndarray:
    """Complex conjugation of every amplitude: diag(1, -1) on each pair."""
    if n < 1:
        raise ValueError("n must be a positive integer")
    return np.kron(np.eye(n), np.diag([1.0, -1.0]))


def commutant_basis() -> list[np.ndarray]:
    """Real images of i, i*sigma_x, i*sigma_y, i*sigma_z for one qubit.

    These four antisymmetric matrices span the operators that commute with
    the single-qubit complex structure; the first is j_operator(2) itself.
    """
    paulis = (np.eye(2, dtype=complex), PAULI_X, PAULI_Y, PAULI_Z)
    return [realify_op(1j * p) for p in paulis]
