import cmath
import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import angles_st, phase_st, states
from hopfqubit import qubit
from hopfqubit.qubit import (
    ONE,
    ZERO,
    BlochAngles,
    DomainError,
    NormalizationError,
    PureState,
)

S = 1 / math.sqrt(2)


def close(z, w, tol=1e-12):
    return abs(complex(z) - complex(w)) <= tol


# -- types ------------------------------------------------------------------

def test_state_rejects_unnormalized():
    with pytest.raises(NormalizationError):
        PureState(1, 1)
    with pytest.raises(NormalizationError):
        PureState(float("nan"), 0)


def test_real4_lies_on_three_sphere():
    psi = PureState(0.6j, 0.8)
    assert psi.real4.tolist() == [0.0, 0.6, 0.8, 0.0]
    assert math.isclose(np.sum(psi.real4 ** 2), 1.0)


@pytest.mark.parametrize("theta, phi, expected", [
    (0.0, 1.3, (0.0, 0.0)),
    (math.pi, 5.0, (math.pi, 0.0)),
    (1.0, -math.pi / 2, (1.0, 3 * math.pi / 2)),
    (1.0, 2 * math.pi, (1.0, 0.0)),
])
def test_bloch_angles_canonicalization(theta, phi, expected):
    g = BlochAngles(theta, phi)
    assert (g.theta, g.phi) == pytest.approx(expected, abs=1e-15)


def test_bloch_angles_reject_theta_out_of_range():
    with pytest.raises(DomainError):
        BlochAngles(4.0, 0.0)


def test_matrix_predicates():
    assert qubit.is_special_unitary(qubit.I2)
    assert qubit.is_unitary(1j * qubit.I2) and not qubit.is_special_unitary(1j * qubit.I2)
    assert qubit.is_hermitian(qubit.SIGMA_2)
    assert not qubit.is_hermitian(1j * qubit.SIGMA_2)
    assert not qubit.is_unitary(2 * qubit.I2)


# -- state_from_angles ------------------------------------------------------

def test_state_from_angles_poles():
    assert qubit.state_from_angles(BlochAngles(0, 0)) == ZERO
    psi = qubit.state_from_angles(BlochAngles(math.pi, 0))
    assert close(psi.a, 0, 1e-16) and close(psi.b, 1)


def test_state_from_angles_equator():
    psi = qubit.state_from_angles(BlochAngles(math.pi / 2, math.pi / 2))
    # independent scalar evaluation: cos(pi/4) = 1/sqrt2, exp(i pi/2) sin(pi/4) = i/sqrt2
    assert close(psi.a, S) and close(psi.b, 1j * S)


# -- angles_from_state ------------------------------------------------------

@pytest.mark.parametrize("psi, expected", [
    (ZERO, (0.0, 0.0)),
    (PureState(S, 1j * S), (math.pi / 2, math.pi / 2)),
    (PureState(cmath.exp(0.7j) * S, cmath.exp(0.7j) * 1j * S), (math.pi / 2, math.pi / 2)),
    (ONE.scaled(cmath.exp(2j)), (math.pi, 0.0)),
])
def test_angles_from_state(psi, expected):
    g = qubit.angles_from_state(psi)
    assert (g.theta, g.phi) == pytest.approx(expected, abs=1e-12)
    assert qubit.same_ray(qubit.state_from_angles(g), psi)


@given(angles_st)
def test_angle_round_trip(g):
    back = qubit.angles_from_state(qubit.state_from_angles(g))
    assert back.theta == pytest.approx(g.theta, abs=1e-9)
    if 1e-6 < g.theta < math.pi - 1e-6:
        assert abs(cmath.phase(cmath.exp(1j * (back.phi - g.phi)))) <= 1e-9


# -- density matrices -------------------------------------------------------

@pytest.mark.parametrize("psi, expected", [
    (ZERO, [[1, 0], [0, 0]]),
    (PureState(S, S), [[0.5, 0.5], [0.5, 0.5]]),
    # (a, b) = (1/sqrt2, i/sqrt2): a a* = 1/2, a b* = -i/2, b a* = i/2, b b* = 1/2
    (PureState(S, 1j * S), [[0.5, -0.5j], [0.5j, 0.5]]),
])
def test_density_matrix(psi, expected):
    np.testing.assert_allclose(qubit.density_matrix(psi), expected, atol=1e-12)


@pytest.mark.parametrize("rho, expected", [
    ([[1, 0], [0, 0]], (0, 0, 1)),
    # Tr(rho s1) = 1/2 + 1/2, Tr(rho s2) = -i/2 + i/2, Tr(rho s3) = 1/2 - 1/2
    ([[0.5, 0.5], [0.5, 0.5]], (1, 0, 0)),
    ([[0.5, 0], [0, 0.5]], (0, 0, 0)),
])
def test_bloch_from_density(rho, expected):
    r = qubit.bloch_from_density(np.array(rho, dtype=complex))
    assert (r.x, r.y, r.z) == pytest.approx(expected, abs=1e-12)


def test_mixed_density_gives_short_vector():
    assert qubit.bloch_from_density(np.eye(2) / 2).norm == 0.0


@pytest.mark.parametrize("rho", [
    [[1, 1], [0, 0]],
    [[1, 0], [0, 1]],
])
def test_bloch_from_density_rejects_invalid(rho):
    with pytest.raises(DomainError):
        qubit.bloch_from_density(np.array(rho, dtype=complex))


@pytest.mark.parametrize("theta, phi, expected", [
    (0, 0, (0, 0, 1)),
    (math.pi / 2, 0, (1, 0, 0)),
    (math.pi / 2, math.pi / 2, (0, 1, 0)),
])
def test_bloch_vector_from_angles(theta, phi, expected):
    r = qubit.bloch_vector_from_angles(BlochAngles(theta, phi))
    assert (r.x, r.y, r.z) == pytest.approx(expected, abs=1e-15)


@given(angles_st)
def test_consistency_triangle(g):
    via_rho = qubit.bloch_from_density(qubit.density_matrix(qubit.state_from_angles(g)))
    direct = qubit.bloch_vector_from_angles(g)
    np.testing.assert_allclose(via_rho.as_array(), direct.as_array(), atol=1e-12)
    assert direct.is_unit()


@given(states())
def test_density_is_half_identity_plus_bloch(psi):
    r = qubit.bloch_vector_from_angles(qubit.angles_from_state(psi))
    np.testing.assert_allclose(qubit.density_matrix(psi), qubit.density_from_bloch(r), atol=1e-12)


@given(states(), phase_st)
def test_density_phase_invariance(psi, alpha):
    np.testing.assert_allclose(
        qubit.density_matrix(psi.scaled(cmath.exp(1j * alpha))), qubit.density_matrix(psi), atol=1e-12)


@given(states())
def test_density_purity(psi):
    rho = qubit.density_matrix(psi)
    np.testing.assert_allclose(rho @ rho, rho, atol=1e-12)
    assert qubit.is_hermitian(rho)
    assert np.trace(rho) == pytest.approx(1, abs=1e-12)
    np.testing.assert_allclose(np.linalg.eigvalsh(rho), [0, 1], atol=1e-12)


# -- inner products and rays ------------------------------------------------

def test_inner_product_basis():
    assert qubit.inner_product(ZERO, ZERO) == 1
    assert qubit.inner_product(ZERO, ONE) == 0


def test_inner_product_is_conjugate_linear_in_first_slot():
    psi = PureState(S, 1j * S)
    assert close(qubit.inner_product(psi.scaled(1j), ZERO), -1j * S)
    assert close(qubit.inner_product(ZERO, psi.scaled(1j)), 1j * S)


@pytest.mark.parametrize("psi1, psi2, expected", [
    (ZERO, ZERO.scaled(cmath.exp(1.3j)), True),
    (ZERO, ONE, False),
    (PureState(S, S), PureState(S, -S), False),
])
def test_same_ray(psi1, psi2, expected):
    assert qubit.same_ray(psi1, psi2) is expected


@pytest.mark.parametrize("psi, expected", [
    (ZERO.scaled(cmath.exp(0.4j)), (1, 0)),
    (PureState(1j * S, 1j * S), (S, S)),
    (PureState(0, cmath.exp(2.2j)), (0, 1)),
])
def test_canonical_representative(psi, expected):
    rep = qubit.canonical_representative(psi)
    assert close(rep.a, expected[0]) and close(rep.b, expected[1])


@given(states(), phase_st)
def test_canonical_representative_is_idempotent_and_ray_preserving(psi, alpha):
    rep = qubit.canonical_representative(psi.scaled(cmath.exp(1j * alpha)))
    assert qubit.canonical_representative(rep) == rep
    assert qubit.same_ray(rep, psi)
    assert rep.a.imag == 0 and rep.a.real >= 0 or abs(psi.a) <= 1e-9


# -- Pauli algebra ----------------------------------------------------------

def _epsilon(j, k, l):
    perm = (j, k, l)
    if len(set(perm)) < 3:
        return 0
    return 1 if perm in ((0, 1, 2), (1, 2, 0), (2, 0, 1)) else -1


@pytest.mark.parametrize("j, k", list(itertools.product(range(3), repeat=2)))
def test_pauli_products(j, k):
    expected = qubit.I2 * (j == k) + sum(1j * _epsilon(j, k, l) * qubit.PAULI[l] for l in range(3))
    np.testing.assert_array_equal(qubit.PAULI[j] @ qubit.PAULI[k], expected)


@settings(max_examples=50)
@given(st.floats(-100, 100))
def test_wrap_2pi(x):
    r = qubit.wrap_2pi(x)
    assert 0 <= r < 2 * math.pi
    assert abs(cmath.exp(1j * r) - cmath.exp(1j * x)) < 1e-12
