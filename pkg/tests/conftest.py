import math

import numpy as np
import pytest
from hypothesis import strategies as st

from hopfqubit.gadget import EulerAngles
from hopfqubit.qubit import BlochAngles, PureState

TWO_PI = 2 * math.pi

angles_st = st.builds(
    BlochAngles,
    st.floats(0, math.pi),
    st.floats(0, TWO_PI, exclude_max=True),
)

phase_st = st.floats(-20, 20)


@st.composite
def states(draw):
    xs = draw(st.lists(st.floats(-1, 1), min_size=4, max_size=4))
    v = np.array(xs)
    n = np.linalg.norm(v)
    if n < 1e-3:
        v, n = np.array([1.0, 0, 0, 0]), 1.0
    v = v / n
    return PureState(complex(v[0], v[1]), complex(v[2], v[3]))


euler_st = st.builds(
    EulerAngles,
    st.floats(0, TWO_PI),
    st.floats(0, math.pi),
    st.floats(0, TWO_PI),
)


def taylor_expm(m, terms=40):
    """Matrix exponential by summing the power series; used only as an oracle."""
    out = np.eye(2, dtype=complex)
    term = np.eye(2, dtype=complex)
    for k in range(1, terms):
        term = term @ m / k
        out = out + term
    return out


@pytest.fixture
def rng():
    return np.random.default_rng(1234)
