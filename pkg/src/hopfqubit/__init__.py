"""Qubit state geometry: Bloch chart, Hopf fibration and wave-plate preparation."""

from hopfqubit.qubit import (
    ONE,
    ZERO,
    BlochAngles,
    BlochVector,
    DomainError,
    NormalizationError,
    PureState,
)

__all__ = [
    "ONE",
    "ZERO",
    "BlochAngles",
    "BlochVector",
    "DomainError",
    "NormalizationError",
    "PureState",
]
