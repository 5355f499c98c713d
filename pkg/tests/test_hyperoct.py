from itertools import product

import pytest
from hypothesis import given, strategies as st

from bannai_ito.exactring import Ring, mpq
from bannai_ito.hyperoct import (
    GroupAlgebraElement,
    SignedPerm,
    act,
    group_closure,
    identity,
    jucys_murphy,
    q_ij,
    reflection,
    transposition,
)

from conftest import xpolys

GENS = [reflection(3, 1), transposition(3, 1, 2), transposition(3, 2, 3)]
B3 = sorted(group_closure(GENS), key=lambda g: g.code)
elements = st.sampled_from(B3)


def E(g):
    return GroupAlgebraElement.of(g)


def test_group_has_48_elements():
    assert len(B3) == 48
    assert len({g.code for g in B3}) == 48


@given(elements, elements, elements)
def test_product_is_associative(g, h, k):
    assert (g * h) * k == g * (h * k)


@given(elements)
def test_inverse(g):
    assert (g * g.inverse()).is_identity()
    assert (g.inverse() * g).is_identity()


@given(elements, elements, xpolys())
def test_action_is_a_left_action(g, h, f):
    assert act(g * h, f) == act(g, act(h, f))


@given(elements, xpolys(), xpolys())
def test_action_is_multiplicative(g, f, h):
    assert act(g, f * h) == act(g, f) * act(g, h)


def test_reflection_through_sum_hyperplane():
    ring = Ring(3, ())
    g = reflection(3, 1) * reflection(3, 2) * transposition(3, 1, 2)
    assert act(g, ring.x(1)) == -ring.x(2)
    assert act(g, ring.x(2)) == -ring.x(1)
    assert act(g, ring.x(3)) == ring.x(3)
    assert str(g) == "R1*R2*pi12"


@given(elements)
def test_word_reconstructs_element(g):
    h = identity(3)
    for w in g.word():
        if w.startswith("R"):
            h = h * reflection(3, int(w[1:]))
        else:
            h = h * transposition(3, int(w[2]), int(w[3]))
    assert h == g


def test_bad_indices():
    with pytest.raises(IndexError):
        reflection(3, 4)
    with pytest.raises(IndexError):
        transposition(3, 2, 2)
    with pytest.raises(ValueError):
        SignedPerm((0, 0, 1), 0)


def test_q_elements_are_involutions_and_braid():
    Q = {p: q_ij(*p) for p in ((1, 2), (1, 3), (2, 3))}
    one = GroupAlgebraElement.one(3)
    for q in Q.values():
        assert q * q == one
    assert Q[1, 2] * Q[1, 3] == Q[2, 3] * Q[1, 2] == Q[1, 3] * Q[2, 3]
    assert Q[1, 2] * Q[2, 3] == Q[2, 3] * Q[1, 3] == Q[1, 3] * Q[1, 2]


def test_q_intertwines_reflections():
    for i, j in product((1, 2, 3), repeat=2):
        if i != j:
            q = q_ij(min(i, j), max(i, j))
            assert q * E(reflection(3, j)) == E(reflection(3, i)) * q


def test_truncated_q13_is_not_an_involution():
    R1, R2, R3 = (E(reflection(3, i)) for i in (1, 2, 3))
    bad = (R1 + R2 - R1 * R2 * R3) * E(transposition(3, 1, 3)) * mpq(1, 2)
    assert bad * bad != GroupAlgebraElement.one(3)


def test_jucys_murphy_elements_commute():
    jm = jucys_murphy(3)
    for u, v in product(jm, repeat=2):
        assert u * v == v * u


@given(elements, elements)
def test_group_algebra_multiplication_matches_group(g, h):
    assert E(g) * E(h) == E(g * h)
