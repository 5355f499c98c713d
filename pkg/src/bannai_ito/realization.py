"""osp(1,2) realizations with supplementary involutions and their centralizers.

Three realizations on three variables:

* ``b3-scalar``   A_- = D1 R2 R3 + D2 R3 + D3 with type-B Dunkl operators, A_+ likewise with x_i.
* ``z2-scalar``   the same shape with Z_2^3 Dunkl operators (one coupling per axis);
                  this is the three-fold coproduct situation, where the one-index
                  centralizers become constants.
* ``b3-clifford`` A_- = sum D_i e_i, A_+ = sum x_i e_i acting on polynomial
                  Clifford-valued functions.

In all three, the involutions are the reflections R_i and P = R1 R2 R3.
"""
from __future__ import annotations

import copy
from itertools import permutations
from typing import Mapping

from .clifford import CliffordElement, CliffordPoly, mask_of
from .dunkl import DunklKind, dunkl, euler, euler_explicit, m_ij, s_ij_element
from .exactring import ParamPoly, Ring, as_rational, mpq
from .hyperoct import GroupAlgebraElement, identity, q_ij, reflection, transposition
from .opcalc import (
    GroupAction,
    Identity,
    Multiply,
    Operator,
    anticommutator,
    commutator,
    operators_equal,
)

__all__ = [
    "KINDS",
    "Realization",
    "RealizationError",
    "realize",
    "centralizer_element",
    "closed_form",
    "CLOSED_FORMS",
]

KINDS = ("b3-scalar", "z2-scalar", "b3-clifford")
_PARAMS = {"b3-scalar": ("a", "b"), "b3-clifford": ("a", "b"), "z2-scalar": ("mu1", "mu2", "mu3")}
N = 3


class RealizationError(RuntimeError):
    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate


def _third(i, j):
    (k,) = {1, 2, 3} - {i, j}
    return k


class Realization:
    """Bound operators of one realization; derived elements are built on demand and memoised."""

    def __init__(self, kind: str, couplings: Mapping[str, object] | None = None):
        if kind not in KINDS:
            raise ValueError(f"unknown realization {kind!r}; expected one of {KINDS}")
        self.kind = kind
        self.ring = ring = Ring(N, _PARAMS[kind])
        self.clifford = kind == "b3-clifford"
        given = dict(couplings or {})
        unknown = set(given) - set(ring.params)
        if unknown:
            raise ValueError(f"unknown parameters {sorted(unknown)} for {kind}; expected {ring.params}")
        self.couplings = {
            p: (ring.const(as_rational(given[p])) if p in given else ring.param(p)) for p in ring.params
        }
        self.specialization = {p: as_rational(v) for p, v in given.items()}
        if kind == "z2-scalar":
            self.dunkl_kind = DunklKind.z2(*(self.couplings[p] for p in ring.params))
        else:
            self.dunkl_kind = DunklKind.type_b(self.couplings["a"], self.couplings["b"])
        self._memo: dict = {}
        self.Q_elements: dict = {}
        if kind != "z2-scalar":
            self.Q_elements = {pair: q_ij(*pair, params=ring.params) for pair in ((1, 2), (1, 3), (2, 3))}
        self._build()

    # -- the osp(1,2) generators ------------------------------------------
    def _build(self):
        ring = self.ring
        idx = (1, 2, 3)
        self.one = Identity(ring)
        self.D = {i: dunkl(ring, i, self.dunkl_kind) for i in idx}
        self.X = {i: Multiply(ring, ring.x(i), f"x_{i}") for i in idx}
        self.R = {i: GroupAction(ring, reflection(N, i), f"R_{i}") for i in idx}
        self.P_i = self.R
        self.P = self.group(reflection(N, 1) * reflection(N, 2) * reflection(N, 3), "P")
        if self.clifford:
            self.E = {i: Multiply(ring, CliffordElement.e(N, i, ring.params), f"e_{i}") for i in idx}
            self.A_minus = (self.D[1] * self.E[1] + self.D[2] * self.E[2] + self.D[3] * self.E[3]).named("A_minus")
            self.A_plus = (self.X[1] * self.E[1] + self.X[2] * self.E[2] + self.X[3] * self.E[3]).named("A_plus")
        else:
            r23 = self.group(reflection(N, 2) * reflection(N, 3), "R_2R_3")
            self.A_minus = (self.D[1] * r23 + self.D[2] * self.R[3] + self.D[3]).named("A_minus")
            self.A_plus = (self.X[1] * r23 + self.X[2] * self.R[3] + self.X[3]).named("A_plus")
        self.A_0 = euler(ring, self.dunkl_kind, self.D)
        self.A_0_explicit = euler_explicit(ring, self.dunkl_kind)
        self.B_plus = (self.A_plus * self.A_plus).named("B_plus")
        self.B_minus = (self.A_minus * self.A_minus).named("B_minus")

    @property
    def a(self) -> ParamPoly:
        return self.couplings.get("a", self.ring.const(0))

    @property
    def b(self) -> ParamPoly:
        return self.couplings.get("b", self.ring.const(0))

    def mu(self, i: int) -> ParamPoly:
        return self.couplings[f"mu{i}"]

    def specialize(self, assignment: Mapping[str, object]) -> "Realization":
        merged = dict(self.specialization)
        merged.update(assignment)
        out = Realization(self.kind, merged)
        if self.Q_elements != out.Q_elements and self.Q_elements:
            out.Q_elements = dict(self.Q_elements)
        return out

    def with_q(self, pair, element: GroupAlgebraElement) -> "Realization":
        """Copy with one Q_ij replaced (everything derived from Q is rebuilt)."""
        out = copy.copy(self)
        out.Q_elements = dict(self.Q_elements)
        out.Q_elements[tuple(sorted(pair))] = element
        out._memo = {k: v for k, v in self._memo.items() if k[0] in ("C", "Gamma", "O")}
        return out

    def _cached(self, key, build):
        op = self._memo.get(key)
        if op is None:
            op = self._memo[key] = build()
        return op

    # -- building blocks ----------------------------------------------------
    def ga(self, *words) -> GroupAlgebraElement:
        return GroupAlgebraElement.one(N, self.ring.params) if not words else words[0]

    def gel(self, g) -> GroupAlgebraElement:
        return GroupAlgebraElement.of(g, self.ring.params)

    def r_el(self, *indices) -> GroupAlgebraElement:
        g = identity(N)
        for i in indices:
            g = g * reflection(N, i)
        return self.gel(g)

    def pi_el(self, i, j) -> GroupAlgebraElement:
        return self.gel(transposition(N, i, j))

    def group(self, element, label=None) -> Operator:
        return GroupAction(self.ring, element, label)

    def blade(self, *indices) -> Operator:
        return Multiply(self.ring, CliffordElement.blade(N, indices, self.ring.params), "e_" + "".join(map(str, indices)))

    def P_S(self, S) -> Operator:
        g = identity(N)
        for s in S:
            g = g * reflection(N, s)
        return self.group(g, "P_" + "".join(map(str, S)))

    def S_el(self, i, j) -> GroupAlgebraElement:
        return s_ij_element(N, i, j, self.dunkl_kind, self.ring.params)

    def S(self, i, j) -> Operator:
        return self._cached(("S", i, j), lambda: self.group(self.S_el(i, j), f"S_{i}{j}"))

    def S_commutator(self, i, j) -> Operator:
        """[D_i, x_j] built from the operators themselves."""
        return commutator(self.D[i], self.X[j])

    def M(self, i, j) -> Operator:
        return self._cached(("M", i, j), lambda: m_ij(self.ring, i, j, self.dunkl_kind, self.D))

    def Q(self, i, j) -> Operator:
        pair = tuple(sorted((i, j)))
        if pair not in self.Q_elements:
            raise ValueError(f"Q_ij is not defined for the {self.kind} realization")
        return self._cached(("Q", pair), lambda: self.group(self.Q_elements[pair], f"Q_{pair[0]}{pair[1]}"))

    def Q_sum(self) -> Operator:
        return self.Q(1, 2) + self.Q(1, 3) + self.Q(2, 3)

    # -- Casimirs -----------------------------------------------------------
    def gamma(self) -> Operator:
        """(1/2)([A_-, A_+] - 1) P."""
        def build():
            return ((commutator(self.A_minus, self.A_plus) - self.one) * self.P * mpq(1, 2)).named("Gamma")

        return self._cached(("Gamma",), build)

    def sl2_casimir(self) -> Operator:
        """(1/4)(A_0^2 - B_+ B_- - 2 A_0)."""
        return self._cached(
            ("Csu11",),
            lambda: ((self.A_0 * self.A_0 - self.B_plus * self.B_minus - self.A_0 * 2) * mpq(1, 4)).named("C_su11"),
        )

    def centralizer(self, S, form: str = "nested") -> Operator:
        return self._cached(("C", tuple(S), form), lambda: centralizer_element(S, self, form))

    def C(self, *S) -> Operator:
        """C_S with S in increasing order; use ``centralizer`` for a literal ordering."""
        return self.centralizer(tuple(sorted(S)))

    def algebra_casimir(self) -> Operator:
        """C_12^2 + C_13^2 + C_23^2 - a^2 Q^2 - 4ab Q (type-B scalar realization)."""
        def build():
            c12, c13, c23 = self.C(1, 2), self.C(1, 3), self.C(2, 3)
            q = self.Q_sum()
            return (c12 * c12 + c13 * c13 + c23 * c23 - q * q * (self.a * self.a) - q * (self.a * self.b * 4)).named("Casimir")

        return self._cached(("Casimir",), build)

    # -- Clifford extras ----------------------------------------------------
    def _require_clifford(self):
        if not self.clifford:
            raise ValueError(f"{self.kind} has no Clifford generators")

    def Z(self, i) -> Operator:
        self._require_clifford()
        return self._cached(("Z", i), lambda: (self.E[i] * self.R[i]).named(f"Z_{i}"))

    def W(self, i, j) -> Operator:
        self._require_clifford()
        from .clifford import w_ij

        return self._cached(("W", i, j), lambda: w_ij(self.ring, i, j))

    def O(self, S) -> Operator:
        """(1/2)(D_[n] x_S e_S - e_S x_S D_[n] - e_S)."""
        self._require_clifford()

        def build():
            ring = self.ring
            xs = CliffordPoly.zero(ring)
            for s in S:
                xs = xs + CliffordPoly.from_xpoly(ring.x(s), mask_of([s]))
            x_S = Multiply(ring, xs, "x_S")
            e_S = self.blade(*S)
            return ((self.A_minus * x_S * e_S - e_S * x_S * self.A_minus - e_S) * mpq(1, 2)).named(
                "O_" + "".join(map(str, S))
            )

        return self._cached(("O", tuple(S)), build)

    # -- names for the expression parser ------------------------------------
    def named_operator(self, name: str) -> Operator:
        """Resolve names such as ``A_plus``, ``D_1``, ``C_12``, ``Gamma``, ``Q_13``, ``pi_12``."""
        fixed = {
            "A_plus": lambda: self.A_plus,
            "A_minus": lambda: self.A_minus,
            "A_0": lambda: self.A_0,
            "B_plus": lambda: self.B_plus,
            "B_minus": lambda: self.B_minus,
            "P": lambda: self.P,
            "R": lambda: self.P,
            "Gamma": self.gamma,
            "Casimir": self.algebra_casimir,
            "C_su11": self.sl2_casimir,
            "Q": self.Q_sum,
            "Id": lambda: self.one,
        }
        if name in fixed:
            return fixed[name]()
        head, _, digits = name.partition("_")
        if not digits.isdigit() or any(d not in "123" for d in digits):
            raise KeyError(name)
        ind = tuple(int(d) for d in digits)
        single = {"D": self.D, "R": self.R, "P": self.P_i}
        if head in single and len(ind) == 1:
            return single[head][ind[0]]
        if head == "C" and len(set(ind)) == len(ind):
            return self.C(*ind)
        if head == "P" and len(set(ind)) == len(ind):
            return self.P_S(ind)
        if len(ind) == 2 and ind[0] != ind[1] and head in ("pi", "Q", "M", "W"):
            i, j = ind
            if head == "pi":
                return self.group(transposition(N, i, j), name)
            if head == "Q":
                return self.Q(i, j)
            if head == "M":
                return self.M(i, j)
            return self.W(i, j)
        if head == "S" and len(ind) == 2:
            return self.S(*ind)
        if head == "Z" and len(ind) == 1:
            return self.Z(ind[0])
        if head == "O" and len(set(ind)) == len(ind):
            return self.O(ind)
        raise KeyError(name)

    def __repr__(self):
        fixed = ", ".join(f"{k}={v}" for k, v in self.specialization.items())
        return f"Realization({self.kind!r}{', ' + fixed if fixed else ''})"


def centralizer_element(S, r: Realization, form: str = "nested") -> Operator:
    """C_S for a nonempty ordered subset S of {1,2,3}.

    ``form`` selects one of three independent constructions:
    "nested"   (1/4){A_-, [A_+, P_S]} - P_S/2
    "reversed" (1/4){[P_S, A_-], A_+} - P_S/2
    "expanded" (1/4)(A_-A_+P_S - A_-P_SA_+ + A_+P_SA_- - P_SA_+A_-) - P_S/2
    """
    S = tuple(S)
    if not S:
        raise ValueError("C_S is undefined for the empty set")
    if len(set(S)) != len(S) or any(s not in (1, 2, 3) for s in S):
        raise ValueError(f"S must be distinct indices from 1..3, got {S}")
    PS = r.P_S(S)
    Am, Ap = r.A_minus, r.A_plus
    if form == "nested":
        core = anticommutator(Am, commutator(Ap, PS))
    elif form == "reversed":
        core = anticommutator(commutator(PS, Am), Ap)
    elif form == "expanded":
        core = Am * Ap * PS - Am * PS * Ap + Ap * PS * Am - PS * Ap * Am
    else:
        raise ValueError(f"unknown construction {form!r}")
    return (core * mpq(1, 4) - PS * mpq(1, 2)).named("C_" + "".join(map(str, S)))


# -- closed forms --------------------------------------------------------------

def _one_index_scalar(r: Realization, i: int) -> Operator:
    S, R = r.S_el, r.r_el
    half = mpq(1, 2)
    if i == 1:
        el = S(1, 1) * R(1) + S(1, 2) * R(1, 2) + S(1, 3) * R(1, 2, 3) - R(1)
    elif i == 2:
        el = -S(1, 2) + S(2, 2) * R(2) - S(2, 3) - R(2)
    else:
        el = -S(1, 3) * R(2) - S(2, 3) + S(3, 3) * R(3) - R(3)
    return r.group(el * half, f"C_{i}")


def _one_index_q(r: Realization, i: int) -> Operator:
    j, k = [m for m in (1, 2, 3) if m != i]
    el = r.Q_elements[tuple(sorted((i, j)))] + r.Q_elements[tuple(sorted((i, k)))]
    return r.group(el * r.a + GroupAlgebraElement.one(N, r.ring.params) * r.b, f"C_{i}")


def _two_index_scalar(r: Realization, i: int, j: int) -> Operator:
    S, R = r.S_el, r.r_el
    half = mpq(1, 2)
    one = GroupAlgebraElement.one(N, r.ring.params)
    pair = tuple(sorted((i, j)))
    if pair == (1, 2):
        lead = r.M(1, 2) * r.group(R(1))
        rest = (S(1, 1) + S(2, 2) - one) * R(1, 2) * half - (S(1, 3) + S(2, 3) * R(1)) * half
    elif pair == (2, 3):
        lead = r.M(2, 3) * r.group(R(2))
        rest = (S(2, 2) + S(3, 3) - one) * R(2, 3) * half - (S(1, 2) * R(3) + S(1, 3)) * half
    else:
        lead = r.M(1, 3) * r.group(R(1, 2))
        rest = (S(1, 1) + S(3, 3) - one) * R(1, 3) * half - (S(1, 2) * R(3) + S(2, 3) * R(1)) * half
    return (lead + r.group(rest)).named(f"C_{pair[0]}{pair[1]}")


# reflection factor multiplying M_ij in the two-index formula built from C_i
_M_FACTOR = {(1, 2): (1,), (2, 3): (2,), (1, 3): (1, 2)}


def _two_index_from_one(r: Realization, i: int, j: int) -> Operator:
    i, j = sorted((i, j))
    R = r.r_el
    lead = r.M(i, j) * r.group(R(*_M_FACTOR[i, j]))
    ci = _one_index_q(r, i).element
    cj = _one_index_q(r, j).element
    rest = ci * R(j) + cj * R(i) + R(i, j) * mpq(1, 2)
    return (lead + r.group(rest)).named(f"C_{i}{j}")


def _gamma_scalar(r: Realization) -> Operator:
    S, R = r.S_el, r.r_el
    one = GroupAlgebraElement.one(N, r.ring.params)
    lead = r.M(1, 2) * r.group(R(1, 3)) + r.M(1, 3) * r.group(R(1)) + r.M(2, 3) * r.group(R(1, 2))
    rest = (S(1, 1) + S(2, 2) + S(3, 3) - one) * R(1, 2, 3) * mpq(1, 2)
    return (lead + r.group(rest)).named("Gamma")


def _gamma_jucys_murphy(r: Realization) -> Operator:
    R, pi = r.r_el, r.pi_el
    one = GroupAlgebraElement.one(N, r.ring.params)
    jm = (one + R(1, 2)) * pi(1, 2) + (one + R(1, 3)) * pi(1, 3) + (one + R(2, 3)) * pi(2, 3)
    tail = (jm * r.a + (R(1) + R(2) + R(3)) * r.b + one * mpq(1, 2)) * R(1, 2, 3)
    return (r.C(1, 2) * r.R[3] + r.C(1, 3) * r.R[2] + r.C(2, 3) * r.R[1] - r.group(tail)).named("Gamma")


def _one_index_clifford(r: Realization, i: int) -> Operator:
    j, k = [m for m in (1, 2, 3) if m != i]
    S, R = r.S_el, r.r_el
    half = mpq(1, 2)
    op = (
        r.group((S(i, i) - GroupAlgebraElement.one(N, r.ring.params)) * R(i))
        - r.blade(i, j) * r.group(S(i, j) * R(i))
        - r.blade(i, k) * r.group(S(i, k) * R(i))
    )
    return (op * half).named(f"C_{i}")


def _two_index_clifford(r: Realization, i: int, j: int) -> Operator:
    k = _third(i, j)
    S, R = r.S_el, r.r_el
    half = mpq(1, 2)
    one = GroupAlgebraElement.one(N, r.ring.params)
    op = (
        -(r.M(i, j) * r.blade(i, j) * r.group(R(i, j)))
        + r.group((S(i, i) + S(j, j) - one) * R(i, j) * half)
        - r.blade(i, k) * r.group(S(i, k) * R(i, j) * half)
        - r.blade(j, k) * r.group(S(j, k) * R(i, j) * half)
    )
    return op.named(f"C_{i}{j}")


def _gamma_clifford(r: Realization) -> Operator:
    S, R = r.S_el, r.r_el
    one = GroupAlgebraElement.one(N, r.ring.params)
    RR = r.group(R(1, 2, 3))
    lead = -(r.M(1, 2) * r.blade(1, 2)) - r.M(1, 3) * r.blade(1, 3) - r.M(2, 3) * r.blade(2, 3)
    return (lead * RR + r.group((S(1, 1) + S(2, 2) + S(3, 3) - one) * R(1, 2, 3) * mpq(1, 2))).named("Gamma")


def _gamma_decomposed(r: Realization) -> Operator:
    """C12 R3 + C13 R2 + C23 R1 - C1 R2R3 - C2 R1R3 - C3 R1R2 - R/2 from the generic C_S."""
    C, PS = r.C, r.P_S
    op = (
        C(1, 2) * r.R[3] + C(1, 3) * r.R[2] + C(2, 3) * r.R[1]
        - C(1) * PS((2, 3)) - C(2) * PS((1, 3)) - C(3) * PS((1, 2))
        - r.P * mpq(1, 2)
    )
    return op.named("Gamma")


def _one_index_w(r: Realization, i: int) -> Operator:
    j, k = [m for m in (1, 2, 3) if m != i]
    return ((r.W(i, j) + r.W(i, k)) * r.E[i] * r.R[i] * r.a + r.one * r.b).named(f"C_{i}")


def _two_index_o(r: Realization, i: int, j: int) -> Operator:
    # The coefficient fields here are [D_i, x_j], the same S_ij as everywhere else.
    # Written with [x_i, D_j] instead, every S term flips sign and the identity fails.
    k = _third(i, j)
    cS = r.S_el
    half = mpq(1, 2)
    op = (
        r.M(i, j)
        + r.blade(i, j) * r.group((cS(i, i) + cS(j, j)) * half)
        - r.blade(j, k) * r.group(cS(i, k) * half)
        + r.blade(i, k) * r.group(cS(j, k) * half)
        - r.blade(i, j) * half
    )
    return op.named(f"O_{i}{j}")


def _two_index_a0(r: Realization, i: int, j: int) -> Operator:
    R = r.r_el
    head = -(r.M(i, j) * r.blade(i, j)) if r.clifford else None
    tail = ((R(i) + R(j)) * r.b + GroupAlgebraElement.one(N, r.ring.params) * mpq(1, 2)) * R(i, j)
    return (head * r.group(R(i, j)) + r.group(tail)).named(f"C_{i}{j}")


def _one_index_a0(r: Realization, i: int) -> Operator:
    return (r.one * r.b).named(f"C_{i}")


CLOSED_FORMS = {
    # name: {realization kind: builder}
    "C_i": {"b3-scalar": _one_index_scalar, "b3-clifford": _one_index_clifford},
    "C_i:Q": {"b3-scalar": _one_index_q},
    "C_i:W": {"b3-clifford": _one_index_w},
    "C_i:a=0": {"b3-clifford": _one_index_a0},
    "C_ij": {"b3-scalar": _two_index_scalar, "b3-clifford": _two_index_clifford},
    "C_ij:C_i": {"b3-scalar": _two_index_from_one},
    "C_ij:a=0": {"b3-clifford": _two_index_a0},
    "O_ij": {"b3-clifford": _two_index_o},
    "Gamma": {"b3-scalar": _gamma_scalar, "b3-clifford": _gamma_clifford},
    "Gamma:JM": {"b3-scalar": _gamma_jucys_murphy},
    "Gamma:C": {"b3-scalar": _gamma_decomposed, "b3-clifford": _gamma_decomposed, "z2-scalar": _gamma_decomposed},
}


def closed_form(name: str, r: Realization, *indices: int) -> Operator:
    """Literal right-hand side of a named closed-form expression in realization ``r``."""
    builders = CLOSED_FORMS.get(name)
    if builders is None:
        raise ValueError(f"unknown closed form {name!r}")
    build = builders.get(r.kind)
    if build is None:
        raise ValueError(f"closed form {name!r} is not available for {r.kind}")
    if name.endswith(":a=0") and r.a:
        raise ValueError(f"closed form {name!r} requires a = 0")
    expected = 2 if "_ij" in name else 1 if "_i" in name else 0
    if len(indices) != expected or len(set(indices)) != len(indices) or any(i not in (1, 2, 3) for i in indices):
        raise ValueError(f"{name!r} takes {expected} distinct indices from 1..3, got {indices}")
    return r._cached(("closed", name, indices), lambda: build(r, *indices))


def realize(kind: str, params: Mapping[str, object] | None = None, check_degree: int | None = 2) -> Realization:
    """Construct a realization and, unless ``check_degree`` is None, certify its defining relations."""
    r = Realization(kind, params)
    if check_degree is not None:
        checks = {
            "{A_+,A_-} = 2A_0": (anticommutator(r.A_plus, r.A_minus), r.A_0 * 2),
            "[A_0,A_+] = A_+": (commutator(r.A_0, r.A_plus), r.A_plus),
            "[A_0,A_-] = -A_-": (commutator(r.A_0, r.A_minus), -r.A_minus),
            "{P,A_+} = 0": (anticommutator(r.P, r.A_plus), r.one * 0),
            "{P,A_-} = 0": (anticommutator(r.P, r.A_minus), r.one * 0),
        }
        for i, j in permutations((1, 2, 3), 2):
            for name, A in (("A_+", r.A_plus), ("A_-", r.A_minus)):
                checks[f"[P_{i},[P_{j},{name}]] = 0"] = (commutator(r.R[i], commutator(r.R[j], A)), r.one * 0)
        for label, (lhs, rhs) in checks.items():
            cert = operators_equal(lhs, rhs, check_degree, r.clifford)
            if not cert.equal:
                raise RealizationError(f"{kind}: relation {label} fails at {cert.witness}", cert)
    return r
