"""The Hopf fibration S^1 -> S^3 -> S^2.

A state is sent to the plane by the ratio chart ``b / a`` and from there to
the sphere by inverse stereographic projection; :func:`hopf_project` is the
closed form of that composite and has no chart singularity.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from typing import Union

import numpy as np

from hopfqubit import tolerances
from hopfqubit.qubit import DomainError, PureState, TWO_PI


class Infinity:
    """The point at infinity of the extended complex plane."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __reduce__(self):
        return (Infinity, ())


INFINITY = Infinity()

ExtendedComplex = Union[complex, Infinity]


def is_infinite(z: ExtendedComplex) -> bool:
    return z is INFINITY


def extended_close(z: ExtendedComplex, w: ExtendedComplex, tol: float | None = None) -> bool:
    tol = tolerances.get().proj if tol is None else tol
    if is_infinite(z) or is_infinite(w):
        return is_infinite(z) and is_infinite(w)
    return abs(z - w) <= tol


@dataclass(frozen=True)
class SpherePoint:
    x1: float
    x2: float
    x3: float

    def __post_init__(self):
        n = math.sqrt(self.x1 ** 2 + self.x2 ** 2 + self.x3 ** 2)
        if not abs(n - 1.0) <= tolerances.get().norm:
            raise DomainError(f"({self.x1}, {self.x2}, {self.x3}) is not on the unit sphere (norm {n!r})")

    def as_array(self) -> np.ndarray:
        return np.array([self.x1, self.x2, self.x3])

    def __neg__(self) -> "SpherePoint":
        return SpherePoint(-self.x1, -self.x2, -self.x3)


@dataclass(frozen=True)
class Fiber:
    base: SpherePoint
    samples: tuple[PureState, ...]
    phases: tuple[float, ...]

    def real_matrix(self) -> np.ndarray:
        """Samples as rows of an (n, 4) real matrix."""
        return np.array([s.real4 for s in self.samples])


def distance(p: SpherePoint, q: SpherePoint) -> float:
    return float(np.linalg.norm(p.as_array() - q.as_array()))


def ratio_chart(psi: PureState) -> ExtendedComplex:
    if abs(psi.a) <= tolerances.get().pole:
        return INFINITY
    return psi.b / psi.a


def stereographic_inverse(z: ExtendedComplex) -> SpherePoint:
    if is_infinite(z):
        return SpherePoint(0.0, 0.0, 1.0)
    x, y = z.real, z.imag
    r2 = x * x + y * y
    d = r2 + 1.0
    return SpherePoint(2 * x / d, 2 * y / d, (r2 - 1.0) / d)


def stereographic_forward(p: SpherePoint) -> ExtendedComplex:
    gap = 1.0 - p.x3
    if abs(gap) <= tolerances.get().pole:
        return INFINITY
    return complex(p.x1, p.x2) / gap


def hopf_project(psi: PureState) -> SpherePoint:
    w = psi.b * psi.a.conjugate()
    x3 = abs(psi.b) ** 2 - abs(psi.a) ** 2
    return SpherePoint(2 * w.real, 2 * w.imag, x3)


def preimage(p: SpherePoint) -> PureState:
    """One state projecting onto ``p``: the inverse of the closed-form projection."""
    theta = math.acos(min(1.0, max(-1.0, -p.x3)))
    if math.sin(theta) < tolerances.get().pole:
        phi = 0.0
    else:
        phi = math.atan2(p.x2, p.x1)
    half = theta / 2
    return PureState(math.cos(half), cmath.exp(1j * phi) * math.sin(half))


def fiber_sample(p: SpherePoint, n: int) -> Fiber:
    """``n`` equally spaced points of the great circle lying over ``p``."""
    if n < 2:
        raise DomainError(f"need at least 2 fiber samples, got {n}")
    psi0 = preimage(p)
    phases = tuple(TWO_PI * k / n for k in range(n))
    samples = tuple(psi0.scaled(cmath.exp(1j * alpha)) for alpha in phases)
    return Fiber(p, samples, phases)


def numerical_rank(m: np.ndarray, cutoff: float | None = None) -> int:
    cutoff = tolerances.get().rank if cutoff is None else cutoff
    return int(np.sum(np.linalg.svd(m, compute_uv=False) > cutoff))
