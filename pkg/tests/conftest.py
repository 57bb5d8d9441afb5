import random

import pytest
from hypothesis import HealthCheck, settings
from hypothesis import strategies as st

from fano3lab.exactfield import CycNum, zeta
from fano3lab.polyalg import BinaryForm, GroupElt2

settings.register_profile(
    "default",
    max_examples=100,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow, HealthCheck.large_base_example],
)
settings.load_profile("default")

# property tests run at conductor 4: small enough to be fast, big enough for i
SMALL = 4

small_ints = st.integers(min_value=-6, max_value=6)


@st.composite
def cyc_small(draw, conductor: int = SMALL) -> CycNum:
    coords = [draw(st.fractions(min_value=-5, max_value=5, max_denominator=4)) for _ in range(2)]
    return CycNum(conductor, coords)


@st.composite
def cyc_40(draw) -> CycNum:
    coords = [draw(st.integers(min_value=-3, max_value=3)) for _ in range(16)]
    return CycNum(40, coords)


@st.composite
def group_elements(draw, conductor: int = SMALL) -> GroupElt2:
    a, b, c, d = (draw(cyc_small(conductor)) for _ in range(4))
    for shift in (0, 1, 2):
        aa, dd = a + shift, d - shift
        if not (aa * dd - b * c).is_zero():
            return GroupElt2(aa, b, c, dd)
    return GroupElt2(a + 1, 0, 0, 1) if not (a + 1).is_zero() else GroupElt2.identity()


@st.composite
def binary_forms(draw, degree: int, conductor: int = SMALL) -> BinaryForm:
    coeffs = [draw(cyc_small(conductor)) for _ in range(degree + 1)]
    f = BinaryForm(coeffs)
    if f.is_zero():
        f = BinaryForm.monomial(degree, 0)
    return f


@st.composite
def rational_linear_forms(draw) -> BinaryForm:
    a, b = draw(small_ints), draw(small_ints)
    if a == 0 and b == 0:
        a = 1
    return BinaryForm.linear(a, b)


@pytest.fixture
def rng():
    return random.Random(20261016)


@pytest.fixture
def i4():
    return zeta(4)
