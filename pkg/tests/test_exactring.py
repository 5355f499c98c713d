import pytest
from hypothesis import given, strategies as st

from bannai_ito.exactring import (
    ExactnessError,
    ParamPoly,
    Ring,
    StructureError,
    divide_exact,
    mpq,
    substitute_params,
)

from conftest import RING, param_polys, rationals, small_exps, xpolys

x1, x2, x3 = RING.x(1), RING.x(2), RING.x(3)
a, b = RING.param("a"), RING.param("b")


def test_param_poly_arithmetic_and_substitution():
    p = a * a + b
    assert p.substitute({"a": mpq(1, 2), "b": mpq(3, 4)}) == RING.const(1)
    assert str(p) == "b+a^2"
    assert (a - a).is_zero()
    assert (a * 0) == RING.const(0)


def test_ring_rejects_out_of_range_variables():
    with pytest.raises(IndexError):
        RING.x(0)
    with pytest.raises(IndexError):
        RING.x(4)


@given(small_exps, st.integers(0, 7), st.tuples(st.integers(0, 5), st.integers(0, 5)))
def test_pack_unpack_roundtrip(xexp, mask, pexp):
    key = RING.pack(mask, xexp, RING.pack_params(pexp))
    m, e, pcode = RING.unpack(key)
    assert (m, e, RING.unpack_params(pcode)) == (mask, xexp, pexp)


@given(param_polys(), param_polys(), param_polys())
def test_param_poly_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p * q == q * p


@given(xpolys(), xpolys(), xpolys())
def test_xpoly_ring_axioms(p, q, r):
    assert p * (q + r) == p * q + p * r
    assert (p * q) * r == p * (q * r)
    assert p - p == RING.zero()


@given(xpolys(), st.sampled_from([x1, x2, x3, x1 - x2, x2 - x1, x1 + x3, x3 + x2, x2 - x3]))
def test_divide_exact_inverts_multiplication(p, d):
    assert divide_exact(p * d, d) == p


@given(xpolys())
def test_partial_is_a_derivation(p):
    q = x1 * x2 + x3 * x3
    assert (p * q).partial(1) == p.partial(1) * q + p * q.partial(1)


@given(xpolys(), rationals, rationals)
def test_substitution_is_a_ring_map(p, va, vb):
    q = x1 * a + b
    s = {"a": va, "b": vb}
    assert substitute_params(p * q, s) == substitute_params(p, s) * substitute_params(q, s)


def test_divide_exact_examples():
    assert divide_exact(x1 * x1 - x2 * x2, x1 - x2) == x1 + x2
    assert divide_exact(x1 * x1 * x1 * 2, x1) == x1 * x1 * 2
    assert divide_exact(x2 * x2 - x1 * x1, x2 - x1) == x1 + x2


def test_divide_exact_rejects_remainders_and_bad_divisors():
    with pytest.raises(ExactnessError):
        divide_exact(x1, x1 + x2)
    with pytest.raises(ExactnessError):
        divide_exact(x2, x1)
    with pytest.raises(ValueError):
        divide_exact(x1, x1 * 2 + x2)
    with pytest.raises(ValueError):
        divide_exact(x1, x1 * x2)


def test_mixed_rings_are_rejected():
    other = Ring(3, ("mu1", "mu2", "mu3"))
    with pytest.raises(StructureError):
        x1 + other.x(1)


def test_graded_monomial_order():
    assert RING.monomials(1) == [(1, 0, 0), (0, 1, 0), (0, 0, 1)]
    assert len(RING.monomials(2)) == 6
    assert sum(len(RING.monomials(d)) for d in range(7)) == 84


def test_exponent_overflow_is_reported():
    with pytest.raises(OverflowError):
        RING.pack(0, (256, 0, 0))


def test_const_and_gen_constructors():
    assert ParamPoly.const(("a", "b"), 3) == RING.const(3)
    assert ParamPoly.gen(("a", "b"), "b") == b
