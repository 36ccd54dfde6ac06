"""Wave-plate optics for the universal SU(2) polarization gadget.

Two quarter-wave and two half-wave plates on a common axis realize any SU(2)
transformation ``U(xi, eta, zeta) = exp(-i xi s2/2) exp(i eta s3/2) exp(-i zeta s2/2)``.
With ``xi = 0`` the gadget acting on |0> reaches one family of states and
acting on |1> reaches the orthogonal family; :func:`target_to_gadget` picks
the input and plate settings for a requested Bloch direction.
"""

from __future__ import annotations

import cmath
import enum
import math
from dataclasses import dataclass

import numpy as np

from hopfqubit import tolerances
from hopfqubit.qubit import (
    ONE,
    SIGMA_3,
    TWO_PI,
    ZERO,
    BlochAngles,
    DomainError,
    PureState,
    apply,
    phase_agreement,
)


def reduce_pi(x: float) -> float:
    """Reduce an angle to (-pi, pi]."""
    return math.pi - (math.pi - x) % TWO_PI


@dataclass(frozen=True)
class EulerAngles:
    xi: float
    eta: float
    zeta: float

    def __post_init__(self):
        for name in ("xi", "eta", "zeta"):
            object.__setattr__(self, name, float(getattr(self, name)))
        if not 0.0 <= self.eta <= math.pi:
            raise DomainError(f"eta={self.eta!r}: eta is restricted to [0, pi]")
        for name in ("xi", "zeta"):
            value = getattr(self, name)
            if not 0.0 <= value <= TWO_PI:
                raise DomainError(f"{name}={value!r} outside [0, 2pi]")


class Branch(enum.Enum):
    """Sign choice in the plate composition: (sign on h1, sign on h2)."""

    UPPER = (-1, +1)
    LOWER = (+1, -1)


@dataclass(frozen=True)
class PlateAngles:
    q1: float
    h1: float
    q2: float
    h2: float
    sign_branch: Branch

    def as_tuple(self) -> tuple[float, float, float, float]:
        return (self.q1, self.h1, self.q2, self.h2)


@dataclass(frozen=True)
class GateAngles:
    alpha: float
    beta: float

    def __post_init__(self):
        # single-qubit rotations have period 4pi on spinors
        object.__setattr__(self, "alpha", 2 * reduce_pi(self.alpha / 2))
        object.__setattr__(self, "beta", 2 * reduce_pi(self.beta / 2))


class InputChoice(enum.Enum):
    ZERO = "zero"
    ONE = "one"

    @property
    def state(self) -> PureState:
        return ZERO if self is InputChoice.ZERO else ONE


_QUARTER_CORE = np.diag([cmath.exp(1j * math.pi / 4), cmath.exp(-1j * math.pi / 4)])
_HALF_CORE = 1j * SIGMA_3


def rotation_matrix(phi: float) -> np.ndarray:
    """exp(-i phi sigma_2), the SO(2) plate orientation."""
    c, s = math.cos(phi), math.sin(phi)
    return np.array([[c, -s], [s, c]], dtype=complex)


def _conjugate(phi: float, core: np.ndarray) -> np.ndarray:
    r = rotation_matrix(phi)
    # r is real orthogonal, so its inverse is its transpose
    return r @ core @ r.T


def half_wave(phi: float) -> np.ndarray:
    return _conjugate(phi, _HALF_CORE)


def quarter_wave(phi: float) -> np.ndarray:
    return _conjugate(phi, _QUARTER_CORE)


def _sigma2_exp(angle: float) -> np.ndarray:
    return rotation_matrix(angle / 2)


def _sigma3_exp(angle: float) -> np.ndarray:
    return np.diag([cmath.exp(1j * angle / 2), cmath.exp(-1j * angle / 2)])


def euler_unitary(e: EulerAngles) -> np.ndarray:
    return _sigma2_exp(e.xi) @ _sigma3_exp(e.eta) @ _sigma2_exp(e.zeta)


def _plate_subscripts(e: EulerAngles, s1: int, s2: int) -> tuple[float, float, float, float]:
    q1 = e.xi / 2 + math.pi / 4
    h1 = e.xi / 2 + e.eta / 4 + s1 * math.pi / 4
    q2 = e.xi / 2 - math.pi / 4
    h2 = (e.xi - e.zeta) / 4 + s2 * math.pi / 4
    return q1, h1, q2, h2


def plate_angles_from_euler(e: EulerAngles, branch: Branch | None = None) -> PlateAngles:
    branch = VALIDATED_BRANCH if branch is None else branch
    q1, h1, q2, h2 = (reduce_pi(x) for x in _plate_subscripts(e, *branch.value))
    return PlateAngles(q1, h1, q2, h2, branch)


def compose_plates(q1: float, h1: float, q2: float, h2: float) -> np.ndarray:
    return quarter_wave(q1) @ half_wave(h1) @ quarter_wave(q2) @ half_wave(h2)


def gadget_unitary(e: EulerAngles, branch: Branch | None = None) -> np.ndarray:
    return compose_plates(*plate_angles_from_euler(e, branch).as_tuple())


def gadget_unitary_signs(e: EulerAngles, s1: int, s2: int) -> np.ndarray:
    """Plate composition for an arbitrary pair of signs, correlated or not."""
    return compose_plates(*_plate_subscripts(e, s1, s2))


def validation_triples(n: int = 1000, seed: int = 20240917) -> list[EulerAngles]:
    rng = np.random.default_rng(seed)
    xs = rng.uniform(0, TWO_PI, n)
    es = rng.uniform(0, math.pi, n)
    zs = rng.uniform(0, TWO_PI, n)
    return [EulerAngles(x, e, z) for x, e, z in zip(xs, es, zs)]


def branch_agreement(triples, s1: int, s2: int) -> float:
    """Worst phase agreement between a sign choice and the Euler form."""
    return min(phase_agreement(gadget_unitary_signs(e, s1, s2), euler_unitary(e)) for e in triples)


def _select_branch() -> tuple[Branch, dict[Branch, float]]:
    triples = validation_triples()
    scores = {b: branch_agreement(triples, *b.value) for b in Branch}
    for b in Branch:
        if scores[b] >= 1 - tolerances.DEFAULT.fid:
            return b, scores
    raise RuntimeError(f"no plate sign branch reproduces the Euler form: {scores}")


VALIDATED_BRANCH, BRANCH_SCORES = _select_branch()


def prepare(psi_in: PureState, e: EulerAngles) -> PureState:
    return apply(euler_unitary(e), psi_in)


def _check_two_params(eta: float, zeta: float) -> None:
    EulerAngles(0.0, eta, zeta)


def prepare_western(eta: float, zeta: float) -> PureState:
    """U(0, eta, zeta)|0> with the global phase exp(i eta/2) removed."""
    _check_two_params(eta, zeta)
    return PureState(math.cos(zeta / 2), cmath.exp(-1j * eta) * math.sin(zeta / 2))


def prepare_eastern(eta: float, zeta: float) -> PureState:
    """U(0, eta, zeta)|1> with the global phase exp(i eta/2) removed."""
    _check_two_params(eta, zeta)
    return PureState(-math.sin(zeta / 2), cmath.exp(-1j * eta) * math.cos(zeta / 2))


def target_to_gadget(target: BlochAngles) -> tuple[InputChoice, EulerAngles]:
    theta, phi = target.theta, target.phi
    if phi == 0.0 or phi >= math.pi:
        eta = (TWO_PI - phi) % TWO_PI
        return InputChoice.ZERO, EulerAngles(0.0, eta, theta)
    return InputChoice.ONE, EulerAngles(0.0, math.pi - phi, math.pi - theta)


def gate_rotation_axis(alpha: float) -> np.ndarray:
    return rotation_matrix(alpha / 2)


def gate_rotation_z(beta: float) -> np.ndarray:
    return np.diag([cmath.exp(-1j * beta / 2), cmath.exp(1j * beta / 2)])
