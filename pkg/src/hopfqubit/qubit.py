"""Pure qubit states, the Bloch chart and the density-matrix correspondence.

States are stored as two complex amplitudes ``(a, b)`` with
``|a|^2 + |b|^2 = 1``; 2x2 operators are plain ``numpy`` arrays.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from hopfqubit import tolerances

TWO_PI = 2.0 * math.pi

I2 = np.eye(2, dtype=complex)
SIGMA_1 = np.array([[0, 1], [1, 0]], dtype=complex)
SIGMA_2 = np.array([[0, -1j], [1j, 0]], dtype=complex)
SIGMA_3 = np.array([[1, 0], [0, -1]], dtype=complex)
PAULI = (SIGMA_1, SIGMA_2, SIGMA_3)


class NormalizationError(ValueError):
    pass


class DomainError(ValueError):
    pass


def wrap_2pi(x: float) -> float:
    """Reduce an angle to [0, 2pi)."""
    r = math.fmod(x, TWO_PI)
    if r < 0:
        r += TWO_PI
    # fmod of values just below a multiple of 2pi can round up to 2pi
    return 0.0 if r >= TWO_PI else r


@dataclass(frozen=True)
class PureState:
    a: complex
    b: complex

    def __post_init__(self):
        object.__setattr__(self, "a", complex(self.a))
        object.__setattr__(self, "b", complex(self.b))
        n = self.norm_squared
        if not math.isfinite(n) or abs(n - 1.0) > tolerances.get().norm:
            raise NormalizationError(f"|a|^2 + |b|^2 = {n!r}, expected 1")

    @property
    def norm_squared(self) -> float:
        return abs(self.a) ** 2 + abs(self.b) ** 2

    @property
    def vector(self) -> np.ndarray:
        return np.array([self.a, self.b], dtype=complex)

    @property
    def real4(self) -> np.ndarray:
        """The point (x1, x2, x3, x4) of S^3 with a = x1 + i x2, b = x3 + i x4."""
        return np.array([self.a.real, self.a.imag, self.b.real, self.b.imag])

    @classmethod
    def from_vector(cls, v) -> "PureState":
        v = np.asarray(v, dtype=complex).reshape(2)
        return cls(v[0], v[1])

    def scaled(self, factor: complex) -> "PureState":
        return PureState(factor * self.a, factor * self.b)


ZERO = PureState(1, 0)
ONE = PureState(0, 1)


@dataclass(frozen=True)
class BlochAngles:
    theta: float
    phi: float

    def __post_init__(self):
        if not -tolerances.get().ang <= self.theta <= math.pi + tolerances.get().ang:
            raise DomainError(f"theta={self.theta!r} outside [0, pi]")
        theta = min(max(float(self.theta), 0.0), math.pi)
        phi = wrap_2pi(float(self.phi))
        if theta == 0.0 or theta == math.pi:
            phi = 0.0
        object.__setattr__(self, "theta", theta)
        object.__setattr__(self, "phi", phi)


@dataclass(frozen=True)
class BlochVector:
    x: float
    y: float
    z: float

    def as_array(self) -> np.ndarray:
        return np.array([self.x, self.y, self.z])

    @property
    def norm(self) -> float:
        return math.sqrt(self.x * self.x + self.y * self.y + self.z * self.z)

    def is_unit(self) -> bool:
        return abs(self.norm - 1.0) <= tolerances.get().norm


# -- 2x2 matrix predicates ---------------------------------------------------

def dagger(m: np.ndarray) -> np.ndarray:
    return m.conj().T


def is_unitary(m: np.ndarray, tol: float | None = None) -> bool:
    tol = tolerances.get().mat if tol is None else tol
    return bool(np.max(np.abs(dagger(m) @ m - I2)) <= tol)


def is_special_unitary(m: np.ndarray, tol: float | None = None) -> bool:
    tol = tolerances.get().mat if tol is None else tol
    return is_unitary(m, tol) and abs(np.linalg.det(m) - 1) <= tol


def is_hermitian(m: np.ndarray, tol: float | None = None) -> bool:
    tol = tolerances.get().mat if tol is None else tol
    return bool(np.max(np.abs(m - dagger(m))) <= tol)


def phase_agreement(m1: np.ndarray, m2: np.ndarray) -> float:
    """|Tr(m1^dagger m2)| / 2; equals 1 iff the unitaries differ by a global phase."""
    return float(abs(np.trace(dagger(m1) @ m2)) / 2)


def apply(m: np.ndarray, psi: PureState) -> PureState:
    return PureState.from_vector(m @ psi.vector)


def _check_density(rho: np.ndarray) -> None:
    tol = tolerances.get().mat
    if rho.shape != (2, 2):
        raise DomainError(f"density matrix must be 2x2, got shape {rho.shape}")
    if not is_hermitian(rho):
        raise DomainError("density matrix is not Hermitian")
    if abs(np.trace(rho) - 1) > tol:
        raise DomainError(f"density matrix trace is {np.trace(rho)!r}, expected 1")


# -- operations --------------------------------------------------------------

def state_from_angles(angles: BlochAngles) -> PureState:
    half = angles.theta / 2
    return PureState(math.cos(half), cmath.exp(1j * angles.phi) * math.sin(half))


def angles_from_state(psi: PureState) -> BlochAngles:
    theta = 2.0 * math.atan2(abs(psi.b), abs(psi.a))
    # BlochAngles zeroes phi when theta lands exactly on a pole
    return BlochAngles(theta, cmath.phase(psi.b) - cmath.phase(psi.a))


def density_matrix(psi: PureState) -> np.ndarray:
    v = psi.vector
    return np.outer(v, v.conj())


def bloch_from_density(rho: np.ndarray) -> BlochVector:
    """Bloch vector r_k = Tr(rho sigma_k).

    Mixed input is accepted and gives a vector of norm below one.
    """
    rho = np.asarray(rho, dtype=complex)
    _check_density(rho)
    x, y, z = (float(np.trace(rho @ s).real) for s in PAULI)
    return BlochVector(x, y, z)


def bloch_vector_from_angles(angles: BlochAngles) -> BlochVector:
    st = math.sin(angles.theta)
    return BlochVector(st * math.cos(angles.phi), st * math.sin(angles.phi), math.cos(angles.theta))


def density_from_bloch(r: BlochVector) -> np.ndarray:
    return 0.5 * (I2 + r.x * SIGMA_1 + r.y * SIGMA_2 + r.z * SIGMA_3)


def inner_product(psi1: PureState, psi2: PureState) -> complex:
    return psi1.a.conjugate() * psi2.a + psi1.b.conjugate() * psi2.b


def fidelity(psi1: PureState, psi2: PureState) -> float:
    return abs(inner_product(psi1, psi2))


def same_ray(psi1: PureState, psi2: PureState) -> bool:
    return abs(fidelity(psi1, psi2) - 1.0) <= tolerances.get().fid


def canonical_representative(psi: PureState) -> PureState:
    """Rotate the global phase so the first amplitude is real and non-negative.

    Falls back to making ``b`` real and positive when ``|a|`` is at most the
    pole tolerance. The switch is discontinuous: two nearly equal states lying on
    either side of that threshold get different representatives.
    """
    if abs(psi.a) > tolerances.get().pole:
        pivot = psi.a
    else:
        pivot = psi.b
    out = psi.scaled(cmath.exp(-1j * cmath.phase(pivot)))
    if abs(psi.a) > tolerances.get().pole:
        return PureState(abs(psi.a), out.b)
    return PureState(out.a, abs(psi.b))
