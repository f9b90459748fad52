"""Exact translation between complex linear algebra and its real block form.

A complex n-vector is stored as 2n interleaved reals ``(Re c0, Im c0,
Re c1, Im c1, ...)``.  A complex n x n matrix becomes the real 2n x 2n
matrix whose (p, q) block is ``Re(M[p,q]) * I2 + Im(M[p,q]) * J2``, where
``J2 = [[0, -1], [1, 0]]`` squares to minus the identity and stands in for
multiplication by i.  The translation is an algebra homomorphism: sums,
products and Euclidean norms survive it, and unitary matrices land on
orthogonal ones.

Tensor-order convention: under ``numpy.kron`` the interleaved layout reads
``basis index (x) real-imag pair``, so a qubit (a, b) maps to (a_r, a_i,
b_r, b_i) and the block complex structure is ``kron(I_n, J2)``.
"""

from __future__ import annotations

import numpy as np

J2 = np.array([[0.0, -1.0], [1.0, 0.0]])

PAULI_X = np.array([[0.0, 1.0], [1.0, 0.0]], dtype=complex)
PAULI_Y = np.array([[0.0, -1.0j], [1.0j, 0.0]])
PAULI_Z = np.array([[1.0, 0.0], [0.0, -1.0]], dtype=complex)

DEFAULT_TOL = 1e-12


def _as_complex_vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=complex)
    if v.ndim != 1 or v.size == 0:
        raise ValueError("expected a nonempty one-dimensional complex vector")
    return v


def _as_complex_matrix(m) -> np.ndarray:
    m = np.asarray(m, dtype=complex)
    if m.ndim != 2 or m.shape[0] != m.shape[1] or m.shape[0] == 0:
        raise ValueError("expected a nonempty square complex matrix")
    return m


def _as_real_state(r) -> np.ndarray:
    r = np.asarray(r, dtype=float)
    if r.ndim != 1 or r.size == 0 or r.size % 2:
        raise ValueError("real state must have even, nonzero length (interleaved pairs)")
    return r


def _as_real_operator(o) -> np.ndarray:
    o = np.asarray(o, dtype=float)
    if o.ndim != 2 or o.shape[0] != o.shape[1] or o.shape[0] == 0 or o.shape[0] % 2:
        raise ValueError("real operator must be square with even dimension")
    return o


def realify_state(v) -> np.ndarray:
    """Interleave a complex vector into (Re c0, Im c0, Re c1, Im c1, ...)."""
    v = _as_complex_vector(v)
    out = np.empty(2 * v.size)
    out[0::2] = v.real
    out[1::2] = v.imag
    return out


def complexify_state(r) -> np.ndarray:
    """Invert realify_state.  Odd-length input is rejected."""
    r = _as_real_state(r)
    return r[0::2] + 1j * r[1::2]


def realify_op(m) -> np.ndarray:
    """Expand a complex matrix into 2x2 real blocks Re * I2 + Im * J2."""
    m = _as_complex_matrix(m)
    return np.kron(m.real, np.eye(2)) + np.kron(m.imag, J2)


def complexify_op(o) -> np.ndarray:
    """Contract 2x2 real blocks back into a complex matrix.

    Exact inverse of realify_op on block-structured input.  On a general
    real operator it reads off block averages, which is the complex matrix
    of the part that commutes with the block complex structure.
    """
    o = _as_real_operator(o)
    n = o.shape[0] // 2
    blocks = o.reshape(n, 2, n, 2)
    re = (blocks[:, 0, :, 0] + blocks[:, 1, :, 1]) / 2.0
    im = (blocks[:, 1, :, 0] - blocks[:, 0, :, 1]) / 2.0
    return re + 1j * im


def j_operator(n: int) -> np.ndarray:
    """Block-diagonal complex structure on n doubled amplitudes.

    Equals realify_op(i * I_n); squares to minus the identity and is both
    antisymmetric and orthogonal.
    """
    if n < 1:
        raise ValueError("n must be a positive integer")
    return np.kron(np.eye(n), J2)


def scalar_action(z: complex, r) -> np.ndarray:
    """Multiply a real interleaved state by the complex scalar z.

    Acts as Re(z) * I + Im(z) * J without building the matrix.
    """
    r = _as_real_state(r)
    z = complex(z)
    out = np.empty_like(r)
    out[0::2] = z.real * r[0::2] - z.imag * r[1::2]
    out[1::2] = z.imag * r[0::2] + z.real * r[1::2]
    return out


def is_hermitian(m, tol: float = DEFAULT_TOL) -> bool:
    """True when m equals its conjugate transpose within tol (scaled by norm)."""
    m = _as_complex_matrix(m)
    scale = max(1.0, float(np.linalg.norm(m)))
    return bool(np.linalg.norm(m - m.conj().T) <= tol * scale)


def is_unitary(m, tol: float = DEFAULT_TOL) -> bool:
    """True when m.conj().T @ m is the identity within tol."""
    m = _as_complex_matrix(m)
    gram = m.conj().T @ m
    return bool(np.linalg.norm(gram - np.eye(m.shape[0])) <= tol * max(1.0, float(np.linalg.norm(gram))))


def random_unitary(dim: int, rng: np.random.Generator) -> np.ndarray:
    """Haar-distributed unitary from the QR factorization of a complex Gaussian."""
    if dim < 1:
        raise ValueError("dim must be a positive integer")
    z = rng.normal(size=(dim, dim)) + 1j * rng.normal(size=(dim, dim))
    q, r = np.linalg.qr(z)
    d = np.diagonal(r)
    return q * (d / np.abs(d))
