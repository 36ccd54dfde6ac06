"""Numerical tolerances shared by every module.

All comparisons read the active :class:`Tolerances` through :func:`get`.
:func:`scaled` swaps in a uniformly scaled copy for the duration of a block.
"""

from __future__ import annotations

import contextlib
import contextvars
from dataclasses import dataclass, replace, fields


@dataclass(frozen=True)
class Tolerances:
    norm: float = 1e-12
    mat: float = 1e-12
    fid: float = 1e-10
    ang: float = 1e-9
    pole: float = 1e-9
    proj: float = 1e-10
    # singular-value cutoff for the great-circle rank test
    rank: float = 1e-8

    def scale(self, factor: float) -> "Tolerances":
        if factor <= 0:
            raise ValueError(f"tolerance scale must be positive, got {factor}")
        return replace(self, **{f.name: getattr(self, f.name) * factor for f in fields(self)})


DEFAULT = Tolerances()
_active: contextvars.ContextVar[Tolerances] = contextvars.ContextVar("tolerances", default=DEFAULT)


def get() -> Tolerances:
    return _active.get()


@contextlib.contextmanager
def scaled(factor: float):
    token = _active.set(get().scale(factor))
    try:
        yield get()
    finally:
        _active.reset(token)
