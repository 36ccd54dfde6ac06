"""Two concrete group actions and the orbit relations they induce.

* U(1) acting on qubit states by a global phase; orbits are rays.
* The multiplicative group of nonzero reals acting on R^n by scaling; orbits
  are lines through the origin (points of RP^{n-1}).
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass

import numpy as np

from hopfqubit import tolerances
from hopfqubit.qubit import DomainError, PureState, fidelity, wrap_2pi


@dataclass(frozen=True)
class U1Element:
    alpha: float = 0.0

    def __post_init__(self):
        object.__setattr__(self, "alpha", wrap_2pi(float(self.alpha)))

    def __mul__(self, other: "U1Element") -> "U1Element":
        return U1Element(self.alpha + other.alpha)

    def inverse(self) -> "U1Element":
        return U1Element(-self.alpha)

    @property
    def value(self) -> complex:
        return cmath.exp(1j * self.alpha)


IDENTITY = U1Element(0.0)


def u1_act(g: U1Element, psi: PureState) -> PureState:
    return psi.scaled(g.value)


def orbit_equal(psi1: PureState, psi2: PureState) -> bool:
    # |<psi1|psi2>| = 1 exactly when psi2 = e^{i alpha} psi1; no search over alpha needed
    return abs(fidelity(psi1, psi2) - 1.0) <= tolerances.get().fid


def _vector(v) -> np.ndarray:
    v = np.asarray(v, dtype=float)
    if v.ndim != 1 or v.size < 1:
        raise DomainError(f"expected a non-empty 1-d real vector, got shape {v.shape}")
    return v


def scalar_act(lam: float, v) -> np.ndarray:
    if lam == 0:
        raise DomainError("scaling factor must be nonzero")
    return lam * _vector(v)


def projective_class_equal(v, w) -> bool:
    """Whether ``w`` is a nonzero multiple of ``v``.

    Decided by the angle between the lines through ``v`` and ``w`` being within
    the fidelity tolerance. The angle is taken from the chord between unit
    vectors, which stays accurate for nearly parallel inputs where ``1 - |cos|``
    underflows to zero.
    """
    v, w = _vector(v), _vector(w)
    if v.shape != w.shape:
        raise DomainError(f"dimension mismatch: {v.size} vs {w.size}")
    nv, nw = np.linalg.norm(v), np.linalg.norm(w)
    if nv == 0 or nw == 0:
        raise DomainError("the zero vector has no projective class")
    u, t = v / nv, w / nw
    chord = min(np.linalg.norm(u - t), np.linalg.norm(u + t))
    angle = 2.0 * math.asin(min(1.0, chord / 2))
    return angle <= tolerances.get().fid


def is_equivalence_relation(relation, x, y, z) -> dict[str, bool]:
    """Check the three equivalence axioms for ``relation`` on one triple."""
    return {
        "reflexive": relation(x, x),
        "symmetric": relation(x, y) == relation(y, x),
        "transitive": (not (relation(x, y) and relation(y, z))) or relation(x, z),
    }


def scalar_axioms(lam1: float, lam2: float, v, tol: float | None = None) -> dict[str, bool]:
    tol = tolerances.get().norm if tol is None else tol
    v = _vector(v)
    scale = max(1.0, float(np.max(np.abs(v))) * max(1.0, abs(lam1 * lam2)))
    close = lambda p, q: bool(np.max(np.abs(p - q)) <= tol * scale)
    return {
        "identity": close(scalar_act(1.0, v), v),
        "composition": close(scalar_act(lam1, scalar_act(lam2, v)), scalar_act(lam1 * lam2, v)),
        "bijection": close(scalar_act(1.0 / lam1, scalar_act(lam1, v)), v),
    }


def u1_axioms(g1: U1Element, g2: U1Element, psi: PureState, tol: float | None = None) -> dict[str, bool]:
    tol = tolerances.get().norm if tol is None else tol
    close = lambda p, q: bool(np.max(np.abs(p.vector - q.vector)) <= tol)
    return {
        "identity": close(u1_act(IDENTITY, psi), psi),
        "composition": close(u1_act(g1, u1_act(g2, psi)), u1_act(g1 * g2, psi)),
        "bijection": close(u1_act(g1.inverse(), u1_act(g1, psi)), psi),
    }

