from __future__ import annotations

import pytest
from hypothesis import HealthCheck, settings, strategies as st

from bannai_ito.clifford import CliffordPoly
from bannai_ito.exactring import Ring, mpq
from bannai_ito.realization import realize

settings.register_profile(
    "default", deadline=None, max_examples=60, suppress_health_check=[HealthCheck.too_slow]
)
settings.load_profile("default")

RING = Ring(3, ("a", "b"))

rationals = st.fractions(min_value=-5, max_value=5, max_denominator=6).map(lambda q: mpq(q.numerator, q.denominator))
small_exps = st.tuples(*[st.integers(0, 3)] * 3)
param_exps = st.tuples(st.integers(0, 2), st.integers(0, 2))


@st.composite
def param_polys(draw, ring=RING, max_terms=3):
    out = ring.const(0)
    for e, c in draw(st.lists(st.tuples(param_exps, rationals), max_size=max_terms)):
        out = out + ring.param("a") ** e[0] * ring.param("b") ** e[1] * c
    return out


@st.composite
def xpolys(draw, ring=RING, max_terms=4):
    out = ring.zero()
    for e, c in draw(st.lists(st.tuples(small_exps, param_polys(ring)), max_size=max_terms)):
        out = out + ring.monomial(e).scale(c)
    return out


@st.composite
def module_elements(draw, ring=RING, max_terms=4):
    out = CliffordPoly.zero(ring)
    for mask, p in draw(st.lists(st.tuples(st.integers(0, 7), xpolys(ring, 2)), max_size=max_terms)):
        out = out + CliffordPoly.from_xpoly(p, mask)
    return out


@pytest.fixture(scope="session")
def b3():
    return realize("b3-scalar", check_degree=None)


@pytest.fixture(scope="session")
def z2():
    return realize("z2-scalar", check_degree=None)


@pytest.fixture(scope="session")
def cliff():
    return realize("b3-clifford", check_degree=None)
