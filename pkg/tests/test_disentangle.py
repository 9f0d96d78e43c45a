"""The decoherence map and the anti-correlated mixture it produces."""

import math

import numpy as np
import pytest

from eprsim import (
    BRANCH_MINUS_PLUS,
    BRANCH_PLUS_MINUS,
    DirectionAxis,
    X_AXIS,
    Z_AXIS,
    assert_density_operator,
    branch_pair,
    decohere_offdiagonal,
    disentangled_mixture,
    epr_density,
    partial_trace,
    pauli_projection,
    spin_projector,
    spinor,
    tensor_product,
)

ATOL = 1e-12


def random_axis(rng):
    v = rng.normal(size=3)
    return DirectionAxis.from_vector(v / np.linalg.norm(v))


def random_density(rng):
    a = rng.normal(size=(4, 4)) + 1j * rng.normal(size=(4, 4))
    rho = a @ a.conj().T
    return rho / np.trace(rho)


class TestDecohere:
    def test_singlet_along_z(self):
        out = decohere_offdiagonal(epr_density(), Z_AXIS)
        np.testing.assert_allclose(out, np.diag([0.0, 0.5, 0.5, 0.0]), atol=ATOL)

    def test_already_diagonal_state_unchanged(self):
        rho = np.diag([0.0, 1.0, 0.0, 0.0]).astype(complex)
        np.testing.assert_allclose(decohere_offdiagonal(rho, Z_AXIS), rho, atol=ATOL)

    def test_singlet_along_x_by_brute_force_basis_change(self):
        # Independent oracle: build the x product basis by hand, zero the
        # off-diagonal entries there, and transform back.
        h = np.array([[1, -1], [1, 1]], dtype=complex) / math.sqrt(2)  # columns: x+, x-
        u = np.kron(h, h)
        rho = epr_density()
        in_basis = u.conj().T @ rho @ u
        expected = u @ np.diag(np.diag(in_basis)) @ u.conj().T
        out = decohere_offdiagonal(rho, X_AXIS)
        np.testing.assert_allclose(out, expected, atol=ATOL)
        # As a matrix it also equals the equal mixture of the two x branches.
        np.testing.assert_allclose(out, disentangled_mixture(X_AXIS), atol=ATOL)

    def test_matches_mixture_for_random_axes(self):
        rng = np.random.default_rng(29)
        for _ in range(100):
            axis = random_axis(rng)
            np.testing.assert_allclose(
                decohere_offdiagonal(epr_density(), axis),
                disentangled_mixture(axis),
                atol=ATOL,
            )

    def test_idempotent_trace_and_positivity_preserving(self):
        rng = np.random.default_rng(31)
        for _ in range(25):
            axis = random_axis(rng)
            rho = random_density(rng)
            once = decohere_offdiagonal(rho, axis)
            twice = decohere_offdiagonal(once, axis)
            np.testing.assert_allclose(twice, once, atol=ATOL)
            assert_density_operator(once)

    def test_output_depends_on_axis_but_spectrum_does_not(self):
        z_out = decohere_offdiagonal(epr_density(), Z_AXIS)
        x_out = decohere_offdiagonal(epr_density(), X_AXIS)
        assert np.max(np.abs(z_out - x_out)) > 0.1  # anisotropy is real
        np.testing.assert_allclose(
            np.linalg.eigvalsh(z_out), np.linalg.eigvalsh(x_out), atol=ATOL
        )
        np.testing.assert_allclose(
            sorted(np.linalg.eigvalsh(x_out)), [0.0, 0.0, 0.5, 0.5], atol=ATOL
        )


class TestMixture:
    def test_z_matrix(self):
        np.testing.assert_allclose(
            disentangled_mixture(Z_AXIS), np.diag([0.0, 0.5, 0.5, 0.0]), atol=ATOL
        )

    def test_purity_one_half(self):
        rng = np.random.default_rng(41)
        for _ in range(20):
            rho = disentangled_mixture(random_axis(rng))
            assert np.trace(rho).real == pytest.approx(1.0, abs=ATOL)
            assert np.trace(rho @ rho).real == pytest.approx(0.5, abs=ATOL)

    def test_zero_total_spin_along_the_axis(self):
        rng = np.random.default_rng(43)
        for _ in range(20):
            axis = random_axis(rng)
            rho = disentangled_mixture(axis)
            sigma = pauli_projection(axis)
            total = tensor_product(sigma, np.eye(2)) + tensor_product(np.eye(2), sigma)
            assert np.trace(rho @ total).real == pytest.approx(0.0, abs=ATOL)

    def test_marginals_are_maximally_mixed(self):
        rng = np.random.default_rng(47)
        for _ in range(20):
            rho = disentangled_mixture(random_axis(rng))
            np.testing.assert_allclose(partial_trace(rho, 1), 0.5 * np.eye(2), atol=ATOL)
            np.testing.assert_allclose(partial_trace(rho, 2), 0.5 * np.eye(2), atol=ATOL)


class TestBranches:
    def test_z_plus_minus_branch(self):
        np.testing.assert_allclose(
            branch_pair(Z_AXIS, BRANCH_PLUS_MINUS), np.diag([0, 1, 0, 0]), atol=ATOL
        )

    def test_branches_average_to_the_mixture(self):
        rng = np.random.default_rng(53)
        for _ in range(20):
            axis = random_axis(rng)
            avg = 0.5 * (
                branch_pair(axis, BRANCH_PLUS_MINUS) + branch_pair(axis, BRANCH_MINUS_PLUS)
            )
            np.testing.assert_allclose(avg, disentangled_mixture(axis), atol=ATOL)

    def test_x_branch_is_rank_one_product(self):
        rho = branch_pair(X_AXIS, BRANCH_PLUS_MINUS)
        expected = tensor_product(
            np.outer(spinor(X_AXIS, +1), spinor(X_AXIS, +1).conj()),
            np.outer(spinor(X_AXIS, -1), spinor(X_AXIS, -1).conj()),
        )
        np.testing.assert_allclose(rho, expected, atol=ATOL)
        assert np.trace(rho).real == pytest.approx(1.0, abs=ATOL)
        assert np.linalg.matrix_rank(rho, tol=1e-9) == 1
        # Same construction through the projector helper.
        np.testing.assert_allclose(
            rho,
            tensor_product(spin_projector(X_AXIS, +1), spin_projector(X_AXIS, -1)),
            atol=ATOL,
        )

    def test_unknown_branch_rejected(self):
        with pytest.raises(ValueError, match="branch"):
            branch_pair(Z_AXIS, "both")
