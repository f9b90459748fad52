import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from conftest import random_complex_matrix, random_state
from realqm import realmap, superselection
from realqm.superselection import Verdict


def test_linear_part_fixes_realified_operators():
    rng = np.random.default_rng(5)
    for _ in range(50):
        n = int(rng.integers(1, 6))
        op = realmap.realify_op(random_complex_matrix(rng, n))
        assert_array_equal(superselection.linear_part(op), op)
        assert_array_equal(superselection.antilinear_part(op), np.zeros_like(op))


def test_antilinear_part_fixes_conjugation():
    k = superselection.conjugation_op(3)
    assert_array_equal(superselection.antilinear_part(k), k)
    assert_array_equal(superselection.linear_part(k), np.zeros((6, 6)))


def test_parts_sum_back_to_operator():
    rng = np.random.default_rng(13)
    for _ in range(50):
        op = rng.normal(size=(8, 8))
        total = superselection.linear_part(op) + superselection.antilinear_part(op)
        assert_allclose(total, op, rtol=0, atol=1e-14)


def test_parts_have_the_right_j_sign():
    # commuting with J reads J L J = -L once J^2 = -1 is used; the
    # anticommuting part satisfies J A J = +A
    rng = np.random.default_rng(17)
    op = rng.normal(size=(6, 6))
    j = realmap.j_operator(3)
    lin = superselection.linear_part(op)
    anti = superselection.antilinear_part(op)
    assert_allclose(j @ lin @ j, -lin, atol=1e-14)
    assert_allclose(j @ anti @ j, anti, atol=1e-14)


def test_audit_realified_unitary_is_physical():
    rng = np.random.default_rng(43)
    for _ in range(30):
        n = int(rng.integers(1, 6))
        u = realmap.random_unitary(n, rng)
        report = superselection.audit(realmap.realify_op(u))
        assert report.verdict is Verdict.PHYSICAL
        assert report.linear_residual <= 1e-12
        assert report.recovered is not None
        assert_allclose(realmap.realify_op(report.recovered), realmap.realify_op(u), atol=1e-14)


def test_audit_conjugation_is_antilinear():
    report = superselection.audit(superselection.conjugation_op(2))
    assert report.verdict is Verdict.ANTILINEAR
    assert report.recovered is None


def test_audit_mixture_is_extended():
    mixed = realmap.realify_op(realmap.PAULI_X) + superselection.conjugation_op(2)
    report = superselection.audit(mixed)
    assert report.verdict is Verdict.EXTENDED
    assert report.linear_residual > 1.0
    assert report.antilinear_residual > 1.0


def test_audit_zero_operator_counts_as_physical():
    report = superselection.audit(np.zeros((4, 4)))
    assert report.verdict is Verdict.PHYSICAL


def test_audit_respects_relative_tolerance():
    op = realmap.realify_op(realmap.PAULI_Z) + 1e-6 * superselection.conjugation_op(2)
    assert superselection.audit(op, tol=1e-9).verdict is Verdict.EXTENDED
    assert superselection.audit(op, tol=1e-3).verdict is Verdict.PHYSICAL


def test_universal_not_matrix_entries():
    expected = np.array(
        [
            [0.0, 0.0, 1.0, 0.0],
            [0.0, 0.0, 0.0, -1.0],
            [-1.0, 0.0, 0.0, 0.0],
            [0.0, 1.0, 0.0, 0.0],
        ]
    )
    assert_array_equal(superselection.universal_not(), expected)


def test_universal_not_flips_basis_states():
    u = superselection.universal_not()
    assert_array_equal(u @ np.array([1.0, 0.0, 0.0, 0.0]), [0.0, 0.0, -1.0, 0.0])
    assert_array_equal(u @ np.array([0.0, 1.0, 0.0, 0.0]), [0.0, 0.0, 0.0, 1.0])


def test_universal_not_output_is_orthogonal_to_input():
    """The image is orthogonal in the complex sense, not merely the real one."""
    rng = np.random.default_rng(47)
    u = superselection.universal_not()
    for _ in range(100):
        psi = random_state(rng, 2)
        r = realmap.realify_state(psi)
        image = realmap.complexify_state(u @ r)
        assert abs(np.vdot(psi, image)) <= 1e-14


def test_universal_not_is_purely_antilinear():
    u = superselection.universal_not()
    j = realmap.j_operator(2)
    assert_array_equal(j @ u @ j, u)
    assert_array_equal(superselection.antilinear_part(u), u)
    report = superselection.audit(u)
    assert report.verdict is Verdict.ANTILINEAR


def test_universal_not_commutator_with_j_has_norm_four():
    u = superselection.universal_not()
    j = realmap.j_operator(2)
    assert np.linalg.norm(u @ j - j @ u) == 4.0


def test_commutant_basis_commutes_with_j():
    j = realmap.j_operator(2)
    basis = superselection.commutant_basis()
    assert len(basis) == 4
    assert_array_equal(basis[0], j)
    for e in basis:
        assert np.linalg.norm(e @ j - j @ e) <= 1e-14
        assert_array_equal(e.T, -e)  # all four are antisymmetric


def test_commutant_basis_is_linearly_independent():
    stacked = np.stack([e.reshape(-1) for e in superselection.commutant_basis()])
    assert np.linalg.matrix_rank(stacked) == 4


def test_commutant_basis_closes_like_quaternions():
    _, ex, ey, ez = superselection.commutant_basis()
    assert_array_equal(ex @ ey - ey @ ex, -2.0 * ez)
    assert_array_equal(ey @ ez - ez @ ey, -2.0 * ex)
    assert_array_equal(ez @ ex - ex @ ez, -2.0 * ey)


def test_odd_dimension_rejected():
    with pytest.raises(ValueError):
        superselection.linear_part(np.zeros((3, 3)))
    with pytest.raises(ValueError):
        superselection.audit(np.zeros((5, 5)))
