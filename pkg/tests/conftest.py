"""Shared random-object helpers for the test suite."""

import numpy as np


def random_complex_matrix(rng, n):
    return rng.normal(size=(n, n)) + 1j * rng.normal(size=(n, n))


def random_hermitian(rng, n):
    m = random_complex_matrix(rng, n)
    return (m + m.conj().T) / 2.0


def random_state(rng, n):
    v = rng.normal(size=n) + 1j * rng.normal(size=n)
    return v / np.linalg.norm(v)


def random_real_qubit(rng):
    v = rng.normal(size=4)
    return v / np.linalg.norm(v)
