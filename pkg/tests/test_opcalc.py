import pytest
from hypothesis import given, strategies as st

from bannai_ito.clifford import CliffordElement, CliffordPoly
from bannai_ito.exactring import StructureError, mpq
from bannai_ito.hyperoct import reflection, transposition
from bannai_ito.opcalc import (
    GroupAction,
    Identity,
    Multiply,
    Partial,
    anticommutator,
    basis_keys,
    combine,
    commutator,
    is_zero_operator,
    operators_equal,
)

from conftest import RING, module_elements

X = {i: Multiply(RING, RING.x(i)) for i in (1, 2, 3)}
d = {i: Partial(RING, i) for i in (1, 2, 3)}
R1 = GroupAction(RING, reflection(3, 1))
E1 = Multiply(RING, CliffordElement.e(3, 1, RING.params))
OPS = [X[1], X[2], d[1], d[3], R1, GroupAction(RING, transposition(3, 1, 2)), E1, Identity(RING) * RING.param("a")]
ops = st.sampled_from(OPS)


def test_basis_sizes():
    assert sum(1 for _ in basis_keys(RING, 6)) == 84
    assert sum(1 for _ in basis_keys(RING, 6, clifford=True)) == 672


def test_heisenberg_relation():
    assert operators_equal(commutator(d[1], X[1]), Identity(RING), 4).equal
    assert is_zero_operator(commutator(d[1], X[2]), 4).equal


def test_reflection_anticommutes_with_its_coordinate():
    assert is_zero_operator(anticommutator(R1, X[1]), 4).equal
    assert is_zero_operator(anticommutator(R1, d[1]), 4).equal


@given(ops, ops, ops, module_elements())
def test_composition_is_associative_and_linear(p, q, r, f):
    assert ((p * q) * r)(f) == (p * (q * r))(f)
    assert (p * (q + r))(f) == (p * q)(f) + (p * r)(f)


@given(ops, ops, ops)
def test_jacobi_identity(p, q, r):
    jac = commutator(p, commutator(q, r)) + commutator(q, commutator(r, p)) + commutator(r, commutator(p, q))
    assert is_zero_operator(jac, 2, clifford=True).equal


def test_witness_is_first_failing_basis_element():
    cert = operators_equal(X[2] * d[2], Identity(RING) * 0, 3)
    assert not cert.equal
    assert str(cert.witness) == "x2"
    assert str(cert.lhs_image) == "x2"
    assert cert.recheck(X[2] * d[2], Identity(RING) * 0)
    assert cert.to_dict()["witness"] == {"basis": "x2", "lhs": "x2", "rhs": "0"}


def test_degree_zero_is_a_weak_certificate():
    # equal on constants, different on x1
    assert operators_equal(d[1], Identity(RING) * 0, 0).equal
    assert not operators_equal(d[1], Identity(RING) * 0, 1).equal


def test_combine_matches_operators():
    f = CliffordPoly.from_xpoly(RING.x(1) ** 2 * RING.x(2))
    assert combine("commutator", d[1], X[1])(f) == f
    assert combine("scale", d[1], coeff=mpq(1, 2))(f) == (d[1](f)).scale(mpq(1, 2))
    with pytest.raises(ValueError):
        combine("nope", d[1])


def test_operator_rings_must_match():
    from bannai_ito.exactring import Ring

    other = Ring(3, ("mu1", "mu2", "mu3"))
    with pytest.raises(StructureError):
        d[1] + Partial(other, 1)


def test_negative_degree_rejected():
    with pytest.raises(ValueError):
        operators_equal(d[1], d[1], -1)
