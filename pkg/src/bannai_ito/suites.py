"""Named verification suites.

A suite is a list of checks built against one realization.  Each check
compares two operators extensionally up to a degree bound, or two group
algebra elements exactly.  Suite names and check labels are stable: the
command-line tool and the report schema depend on them.
"""
from __future__ import annotations

import time
from dataclasses import dataclass, field
from itertools import permutations

from .exactring import mpq
from .hyperoct import GroupAlgebraElement, jucys_murphy
from .opcalc import EqualityCertificate, Operator, anticommutator, commutator, operators_equal
from .realization import Realization, closed_form

__all__ = [
    "Check",
    "CheckResult",
    "SuiteReport",
    "SUITES",
    "suite_names",
    "suites_for",
    "build_suite",
    "verify_suite",
    "run_check",
]

PAIRS = ((1, 2), (1, 3), (2, 3))
SUBSETS = ((1,), (2,), (3,), (1, 2), (1, 3), (2, 3), (1, 2, 3))
TRIPLES = tuple(permutations((1, 2, 3)))


def _key(*idx):
    return "".join(map(str, idx))


def _pair(i, j):
    return tuple(sorted((i, j)))


@dataclass
class Check:
    label: str
    anchor: str
    lhs: object
    rhs: object
    expect: str = "equal"  # or "differ"

    @property
    def exact(self) -> bool:
        return isinstance(self.lhs, GroupAlgebraElement)


@dataclass
class CheckResult:
    label: str
    anchor: str
    expect: str
    status: str  # "pass" or "fail"
    degree: int | None
    checked: int
    witness: dict | None
    wall_time: float | None

    def to_dict(self) -> dict:
        return {
            "label": self.label,
            "anchor": self.anchor,
            "expect": self.expect,
            "status": self.status,
            "degree": self.degree,
            "checked": self.checked,
            "witness": self.witness,
            "wall_time": self.wall_time,
        }


@dataclass
class SuiteReport:
    suite: str
    realization: str
    degree: int
    results: list[CheckResult] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(r.status == "pass" for r in self.results)

    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if r.status != "pass"]

    def to_dict(self) -> dict:
        return {
            "name": self.suite,
            "realization": self.realization,
            "status": "pass" if self.passed else "fail",
            "identities": [r.to_dict() for r in self.results],
        }


# -- exact group-algebra comparison ----------------------------------------

def _algebra_witness(lhs: GroupAlgebraElement, rhs: GroupAlgebraElement) -> dict | None:
    diff = lhs - rhs
    if not diff:
        return None
    g = min(diff.terms, key=lambda h: (len(h.word()), h.word()))
    show = lambda u: str(u.terms[g]) if g in u.terms else "0"  # noqa: E731
    return {"basis": "1" if g.is_identity() else str(g), "lhs": show(lhs), "rhs": show(rhs)}


def run_check(check: Check, r: Realization, degree: int, timings: bool = True) -> CheckResult:
    t0 = time.perf_counter()
    if check.exact:
        witness = _algebra_witness(check.lhs, check.rhs)
        equal, deg, checked = witness is None, None, len(check.lhs.terms) + len(check.rhs.terms)
    else:
        cert: EqualityCertificate = operators_equal(check.lhs, check.rhs, degree, r.clifford)
        equal, deg, checked = cert.equal, degree, cert.checked
        witness = cert.to_dict().get("witness")
    ok = equal if check.expect == "equal" else not equal
    return CheckResult(
        check.label, check.anchor, check.expect, "pass" if ok else "fail", deg, checked, witness,
        round(time.perf_counter() - t0, 6) if timings else None,
    )


# -- suite bodies --------------------------------------------------------------

def _osp_core(r: Realization):
    Ap, Am, A0, P, one = r.A_plus, r.A_minus, r.A_0, r.P, r.one
    Bp, Bm, G, zero = r.B_plus, r.B_minus, r.gamma(), r.one * 0
    anchor = "osp(1,2) defining relations"
    yield Check("{A_+,A_-} = 2A_0", anchor, anticommutator(Ap, Am), A0 * 2)
    yield Check("[A_0,A_+] = A_+", anchor, commutator(A0, Ap), Ap)
    yield Check("[A_0,A_-] = -A_-", anchor, commutator(A0, Am), -Am)
    yield Check("A_0 = sum x_i d_i + const", "Euler operator", A0, r.A_0_explicit)
    anchor = "grade involution"
    yield Check("P^2 = 1", anchor, P * P, one)
    yield Check("[P,A_0] = 0", anchor, commutator(P, A0), zero)
    yield Check("{P,A_+} = 0", anchor, anticommutator(P, Ap), zero)
    yield Check("{P,A_-} = 0", anchor, anticommutator(P, Am), zero)
    anchor = "odd generator squares"
    yield Check("[A_-,A_+^2] = 2A_+", anchor, commutator(Am, Bp), Ap * 2)
    yield Check("[A_+,A_-^2] = -2A_-", anchor, commutator(Ap, Bm), Am * -2)
    anchor = "su(1,1) subalgebra"
    yield Check("[B_+,B_-] = -4A_0", anchor, commutator(Bp, Bm), A0 * -4)
    yield Check("[A_0,B_+] = 2B_+", anchor, commutator(A0, Bp), Bp * 2)
    yield Check("[A_0,B_-] = -2B_-", anchor, commutator(A0, Bm), Bm * -2)
    yield Check("[P,B_+] = 0", anchor, commutator(P, Bp), zero)
    yield Check("[P,B_-] = 0", anchor, commutator(P, Bm), zero)
    anchor = "Gamma is central"
    yield Check("[Gamma,A_+] = 0", anchor, commutator(G, Ap), zero)
    yield Check("[Gamma,A_-] = 0", anchor, commutator(G, Am), zero)
    yield Check("[Gamma,A_0] = 0", anchor, commutator(G, A0), zero)
    yield Check("[Gamma,P] = 0", anchor, commutator(G, P), zero)
    # the constant is 3/4; see the ledger for the 3/2 discrepancy
    yield Check(
        "Gamma^2 - Gamma P = 4C + 3/4", "Gamma versus su(1,1) Casimir",
        G * G - G * P, r.sl2_casimir() * 4 + one * mpq(3, 4),
    )


def _involutions(r: Realization):
    Ap, Am, A0, P, one, zero = r.A_plus, r.A_minus, r.A_0, r.P, r.one, r.one * 0
    Pi = r.P_i
    yield Check("P = P_1P_2P_3", "involution product", Pi[1] * Pi[2] * Pi[3], P)
    for i in (1, 2, 3):
        yield Check(f"P_{i}^2 = 1", "involutions square to one", Pi[i] * Pi[i], one)
        yield Check(f"[P_{i},A_0] = 0", "involutions are even", commutator(Pi[i], A0), zero)
        yield Check(f"[P_{i},B_+] = 0", "involutions are even", commutator(Pi[i], r.B_plus), zero)
        yield Check(f"[P_{i},B_-] = 0", "involutions are even", commutator(Pi[i], r.B_minus), zero)
    for i, j in PAIRS:
        yield Check(f"[P_{i},P_{j}] = 0", "involutions commute", commutator(Pi[i], Pi[j]), zero)
    for i, j in permutations((1, 2, 3), 2):
        for s, A in (("+", Ap), ("-", Am)):
            yield Check(f"[P_{i},[P_{j},A_{s}]] = 0", "decomposition property",
                        commutator(Pi[i], commutator(Pi[j], A)), zero)
    for i, j in PAIRS:
        for s, t, A, B in (("+", "-", Ap, Am), ("-", "+", Am, Ap)):
            yield Check(
                f"P_{i}A_{s}P_{j} + P_{j}A_{s}P_{i} = P_{i}P_{j}A_{s} + A_{s}P_{i}P_{j}", "involution lemma, linear",
                Pi[i] * A * Pi[j] + Pi[j] * A * Pi[i], Pi[i] * Pi[j] * A + A * Pi[i] * Pi[j],
            )
            T = A * B * A
            yield Check(
                f"P_{i}A_{s}A_{t}A_{s}P_{j} + (i<->j) = P_{i}P_{j}A_{s}A_{t}A_{s} + A_{s}A_{t}A_{s}P_{i}P_{j}",
                "involution lemma, cubic",
                Pi[i] * T * Pi[j] + Pi[j] * T * Pi[i], Pi[i] * Pi[j] * T + T * Pi[i] * Pi[j],
            )


def _centralize(r: Realization):
    zero = r.one * 0
    G = r.gamma()
    anchor = "C_S centralizes osp(1,2)"
    for S in SUBSETS:
        C, k = r.C(*S), _key(*S)
        yield Check(f"[C_{k},A_+] = 0", anchor, commutator(C, r.A_plus), zero)
        yield Check(f"[C_{k},A_-] = 0", anchor, commutator(C, r.A_minus), zero)
        yield Check(f"[C_{k},A_0] = 0", anchor, commutator(C, r.A_0), zero)
        yield Check(f"[C_{k},P] = 0", anchor, commutator(C, r.P), zero)
    for S in SUBSETS:
        yield Check(f"[C_{_key(*S)},Gamma] = 0", "C_S commutes with Gamma", commutator(r.C(*S), G), zero)
    for S in SUBSETS:
        k = _key(*S)
        yield Check(f"C_{k} nested = reversed", "two bracket forms agree", r.C(*S), r.centralizer(S, "reversed"))
        yield Check(f"C_{k} nested = expanded", "expanded form agrees", r.C(*S), r.centralizer(S, "expanded"))
    for S in SUBSETS[3:]:
        for T in permutations(S):
            if T != S:
                yield Check(f"C_{_key(*S)} = C_{_key(*T)}", "C_S symmetric in S", r.C(*S), r.C(*T))
    yield Check("C_123 = Gamma", "full-set element is Gamma", r.C(1, 2, 3), G)
    for i in (1, 2, 3):
        yield Check(f"[Gamma,P_{i}] != 0", "Gamma does not commute with P_i",
                    commutator(G, r.P_i[i]), zero, expect="differ")


def _index_lemmas(r: Realization):
    C, Pi, zero = r.C, r.P_i, r.one * 0
    for i, j in PAIRS:
        yield Check(f"C_{i}P_{j} + C_{j}P_{i} = P_{i}C_{j} + P_{j}C_{i}", "one-index exchange",
                    C(i) * Pi[j] + C(j) * Pi[i], Pi[i] * C(j) + Pi[j] * C(i))
        yield Check(f"[C_{i},P_{j}] = -[C_{j},P_{i}]", "one-index exchange, commutator form",
                    commutator(C(i), Pi[j]), -commutator(C(j), Pi[i]))
    for i, j, k in TRIPLES:
        yield Check(f"[P_{i},[P_{j},C_{k}]] = 0", "double commutator with involutions",
                    commutator(Pi[i], commutator(Pi[j], C(k))), zero)
    for S in SUBSETS[3:]:
        PS = r.P_S(S)
        left = sum((Pi[s] * C(s) for s in S[1:]), Pi[S[0]] * C(S[0]))
        right = sum((C(s) * Pi[s] for s in S[1:]), C(S[0]) * Pi[S[0]])
        yield Check(f"P_S sum P_s C_s = sum C_s P_s P_S, S={_key(*S)}", "multi-index exchange",
                    PS * left, right * PS)
        rest = [r.P_S(tuple(t for t in S if t != s)) for s in S]
        total = commutator(rest[0], C(S[0]))
        for s, PR in zip(S[1:], rest[1:]):
            total = total + commutator(PR, C(s))
        yield Check(f"sum [P_(S-s),C_s] = 0, S={_key(*S)}", "multi-index exchange, commutator form", total, zero)
    yield Check("[P_iP_j,C_k] + [P_jP_k,C_i] + [P_iP_k,C_j] = 0", "multi-index exchange, three indices",
                commutator(r.P_S((1, 2)), C(3)) + commutator(r.P_S((2, 3)), C(1)) + commutator(r.P_S((1, 3)), C(2)),
                zero)


def _casimir_decomp(r: Realization):
    C, Pi = r.C, r.P_i
    for i, j, k in TRIPLES:
        rhs = (
            C(i, j) * Pi[k] + C(j, k) * Pi[i] + C(i, k) * Pi[j]
            - C(k) * Pi[i] * Pi[j] - C(i) * Pi[j] * Pi[k] - C(j) * Pi[i] * Pi[k]
            - Pi[i] * Pi[j] * Pi[k] * mpq(1, 2)
        )
        yield Check(f"C_{i}{j}{k} decomposition", "Gamma from one- and two-index elements", C(i, j, k), rhs)


def _theorem(r: Realization):
    C, G, zero = r.C, r.gamma(), r.one * 0
    anchor = "anticommutator relation"
    for i, j, k in TRIPLES:
        yield Check(
            f"{{C_{i}{j},C_{j}{k}}} = C_{i}{k} + {{C_{j},C_{i}{j}{k}}} + {{C_{i},C_{k}}}", anchor,
            anticommutator(C(i, j), C(j, k)),
            C(i, k) + anticommutator(C(j), C(i, j, k)) + anticommutator(C(i), C(k)),
        )
        yield Check(
            f"{{C_{i}{j},C_{j}{k}}} = C_{i}{k} + 2C_{j}C_{i}{j}{k} + {{C_{i},C_{k}}}", anchor + ", product form",
            anticommutator(C(i, j), C(j, k)),
            C(i, k) + C(j) * C(i, j, k) * 2 + anticommutator(C(i), C(k)),
        )
    yield Check("[C_12,C_3] + [C_23,C_1] + [C_13,C_2] = 0", "cyclic commutator relation",
                commutator(C(1, 2), C(3)) + commutator(C(2, 3), C(1)) + commutator(C(1, 3), C(2)), zero)
    for i in (1, 2, 3):
        yield Check(f"[C_{i},C_123] = 0", "Gamma central", commutator(C(i), G), zero)
    for i, j in PAIRS:
        yield Check(f"[C_{i}{j},C_123] = 0", "Gamma central", commutator(C(i, j), G), zero)


def _hyperoct(r: Realization):
    Qe = r.Q_elements
    Q = lambda i, j: Qe[_pair(i, j)]  # noqa: E731
    one = GroupAlgebraElement.one(3, r.ring.params)
    R = r.r_el
    a, b, zero = r.a, r.b, r.one * 0
    C = r.C
    for i, j in permutations((1, 2, 3), 2):
        yield Check(f"S_{i}{j}R_{i}R_{j} = -S_{i}{j}", "off-diagonal S absorbs R_iR_j",
                    r.S_el(i, j) * R(i, j), -r.S_el(i, j))
    for i, j in PAIRS:
        yield Check(f"Q_{i}{j}^2 = 1", "Q_ij are involutions", Q(i, j) * Q(i, j), one)
    yield Check("Q_12Q_13 = Q_23Q_12", "Q_ij braid like transpositions", Q(1, 2) * Q(1, 3), Q(2, 3) * Q(1, 2))
    yield Check("Q_23Q_12 = Q_13Q_23", "Q_ij braid like transpositions", Q(2, 3) * Q(1, 2), Q(1, 3) * Q(2, 3))
    yield Check("Q_12Q_23 = Q_23Q_13", "Q_ij braid like transpositions", Q(1, 2) * Q(2, 3), Q(2, 3) * Q(1, 3))
    yield Check("Q_23Q_13 = Q_13Q_12", "Q_ij braid like transpositions", Q(2, 3) * Q(1, 3), Q(1, 3) * Q(1, 2))
    for i, j in permutations((1, 2, 3), 2):
        yield Check(f"Q_{_key(*_pair(i, j))}R_{j} = R_{i}Q_{_key(*_pair(i, j))}", "Q_ij intertwines reflections",
                    Q(i, j) * R(j), R(i) * Q(i, j))
    for i, j in PAIRS:
        yield Check(f"[Q_{i}{j},C_{i}{j}] = 0", "Q_ij commutes with C_ij", commutator(r.Q(i, j), C(i, j)), zero)
    for (i, j), (k, l), (m, n) in (
        ((1, 2), (1, 3), (2, 3)), ((1, 2), (2, 3), (1, 3)), ((1, 3), (1, 2), (2, 3)),
        ((1, 3), (2, 3), (1, 2)), ((2, 3), (1, 2), (1, 3)), ((2, 3), (1, 3), (1, 2)),
    ):
        yield Check(f"Q_{i}{j}C_{k}{l} = C_{m}{n}Q_{i}{j}", "Q_ij permutes the C_kl",
                    r.Q(i, j) * C(k, l), C(m, n) * r.Q(i, j))
    for i, j, k in TRIPLES:
        if i < j:
            yield Check(f"C_{i} + C_{j} - C_{k} = 2aQ_{i}{j} + b", "one-index elements from Q",
                        C(i) + C(j) - C(k), r.Q(i, j) * (a * 2) + r.one * b)
    for i, j in PAIRS:
        yield Check(f"[Q_{i}{j},A_+] = 0", "Q_ij are symmetries", commutator(r.Q(i, j), r.A_plus), zero)
        yield Check(f"[Q_{i}{j},A_-] = 0", "Q_ij are symmetries", commutator(r.Q(i, j), r.A_minus), zero)
    for i, j in PAIRS:
        yield Check(f"C_{i}{j} = M_{i}{j}X + C_{i}R_{j} + C_{j}R_{i} + R_{i}R_{j}/2", "two-index from one-index",
                    closed_form("C_ij:C_i", r, i, j), C(i, j))
    jm = jucys_murphy(3, r.ring.params)
    names = ["R_1", "R_2", "R_3", "m_2", "m_3"]
    for x in range(5):
        for y in range(x + 1, 5):
            yield Check(f"[{names[x]},{names[y]}] = 0", "Jucys-Murphy elements commute",
                        jm[x] * jm[y], jm[y] * jm[x])
    G = r.gamma()
    for i, j, k in TRIPLES:
        Qs = r.Q(i, j) + r.Q(j, k)
        rhs = (
            C(i, k)
            + G * (Qs * a + r.one * b) * 2
            + (anticommutator(r.Q(i, j), r.Q(j, k)) * 3 + r.one * 2) * (a * a)
            + (Qs + r.Q(i, k) * 2) * (a * b * 2)
            + r.one * (b * b * 2)
        )
        yield Check(f"{{C_{i}{j},C_{j}{k}}} hyperoctahedral form", "hyperoctahedral anticommutator relation",
                    anticommutator(C(i, j), C(j, k)), rhs)
        left = Q(i, j) + Q(i, k)
        right = Q(i, k) + Q(j, k)
        yield Check(f"{{Q_{i}{j}+Q_{i}{k},Q_{i}{k}+Q_{j}{k}}} = 3{{Q_{i}{j},Q_{j}{k}}} + 2", "Q anticommutator identity",
                    left * right + right * left, (Q(i, j) * Q(j, k) + Q(j, k) * Q(i, j)) * 3 + one * 2)
    qsum = (
        commutator(C(1, 2), r.Q(1, 3) + r.Q(2, 3))
        + commutator(C(2, 3), r.Q(1, 2) + r.Q(1, 3))
        + commutator(C(1, 3), r.Q(1, 2) + r.Q(2, 3))
    )
    yield Check("[C_12,Q_13+Q_23] + [C_23,Q_12+Q_13] + [C_13,Q_12+Q_23] = 0", "cyclic relation via Q", qsum, zero)
    yield Check("cyclic commutator sum = a * Q form", "cyclic relation via Q",
                commutator(C(1, 2), C(3)) + commutator(C(2, 3), C(1)) + commutator(C(1, 3), C(2)), qsum * a)


def _casimir_invariant(r: Realization):
    Cas, C, zero = r.algebra_casimir(), r.C, r.one * 0
    Qe = r.Q_elements
    a, b = r.a, r.b
    for i, j in PAIRS:
        yield Check(f"[C,C_{i}{j}] = 0", "Casimir commutes with two-index elements", commutator(Cas, C(i, j)), zero)
    for i in (1, 2, 3):
        yield Check(f"[C,C_{i}] = 0", "Casimir commutes with one-index elements", commutator(Cas, C(i)), zero)
    sq = C(1, 2) * C(1, 2) + C(1, 3) * C(1, 3) + C(2, 3) * C(2, 3)
    yield Check(
        "[sum C_ij^2,C_12] = 3a^2[{Q_12,Q_23},C_12] + 4ab[Q,C_12]", "Casimir proof step",
        commutator(sq, C(1, 2)),
        commutator(anticommutator(r.Q(1, 2), r.Q(2, 3)), C(1, 2)) * (a * a * 3)
        + commutator(r.Q_sum(), C(1, 2)) * (a * b * 4),
    )
    ac = lambda x, y: Qe[x] * Qe[y] + Qe[y] * Qe[x]  # noqa: E731
    yield Check("{Q_12,Q_13} = {Q_13,Q_23}", "equal Q anticommutators", ac((1, 2), (1, 3)), ac((1, 3), (2, 3)))
    yield Check("{Q_13,Q_23} = {Q_12,Q_23}", "equal Q anticommutators", ac((1, 3), (2, 3)), ac((1, 2), (2, 3)))
    q = Qe[1, 2] + Qe[1, 3] + Qe[2, 3]
    yield Check("Q^2 = 3 + 3{Q_12,Q_13}", "square of Q", q * q,
                GroupAlgebraElement.one(3, r.ring.params) * 3 + ac((1, 2), (1, 3)) * 3)
    yield Check("[Q,C_1] = 0", "Q commutes with C_1", commutator(r.Q_sum(), C(1)), zero)
    yield Check("[Q_13,Q_12+Q_23] = 0", "Q commutes with C_1",
                Qe[1, 3] * (Qe[1, 2] + Qe[2, 3]) - (Qe[1, 2] + Qe[2, 3]) * Qe[1, 3],
                GroupAlgebraElement.zero(3, r.ring.params))
    G = r.gamma()
    yield Check("C = Gamma^2 + 3(a^2+b^2) - 1/4", "Casimir in terms of Gamma",
                Cas, G * G + r.one * ((a * a + b * b) * 3 - mpq(1, 4)))


def _closed_forms(r: Realization):
    C = r.C
    anchor = "closed form equals generic construction"
    for i in (1, 2, 3):
        yield Check(f"C_{i} closed form", anchor, closed_form("C_i", r, i), C(i))
        alt = "C_i:Q" if r.kind == "b3-scalar" else "C_i:W"
        yield Check(f"C_{i} {'Q' if alt == 'C_i:Q' else 'W'} form", anchor, closed_form(alt, r, i), C(i))
    for i, j in PAIRS:
        yield Check(f"C_{i}{j} closed form", anchor, closed_form("C_ij", r, i, j), C(i, j))
    yield Check("Gamma closed form", anchor, closed_form("Gamma", r), r.gamma())
    if r.kind == "b3-scalar":
        yield Check("Gamma Jucys-Murphy form", anchor, closed_form("Gamma:JM", r), r.gamma())


def _clifford(r: Realization):
    zero = r.one * 0
    yield Check("Gamma decomposition", "Gamma from one- and two-index elements", closed_form("Gamma:C", r), r.gamma())
    r0 = r.specialize({"a": 0})
    for i, j in PAIRS:
        yield Check(f"C_{i}{j} at a=0", "a=0 reduction", closed_form("C_ij:a=0", r0, i, j), r0.C(i, j))
    for i in (1, 2, 3):
        yield Check(f"C_{i} at a=0", "a=0 reduction", closed_form("C_i:a=0", r0, i), r0.C(i))
    for S in SUBSETS:
        O, s, k = r.O(S), (-1) ** len(S), _key(*S)
        yield Check(f"A_-O_{k} = (-1)^|S| O_{k}A_-", "O_S parity", r.A_minus * O, O * r.A_minus * s)
        yield Check(f"A_+O_{k} = (-1)^|S| O_{k}A_+", "O_S parity", r.A_plus * O, O * r.A_plus * s)
    for i, j in PAIRS:
        yield Check(f"O_{i}{j} closed form", "O_ij closed form", closed_form("O_ij", r, i, j), r.O((i, j)))
    for i in (1, 2, 3):
        yield Check(f"{{A_+,Z_{i}}} = 0", "Z_i anticommute", anticommutator(r.A_plus, r.Z(i)), zero)
        yield Check(f"{{A_-,Z_{i}}} = 0", "Z_i anticommute", anticommutator(r.A_minus, r.Z(i)), zero)
    for i, j in PAIRS:
        # e_ie_j squares to -1, so the correspondence carries a sign; see the ledger
        yield Check(f"C_{i}{j} = -O_{i}{j}e_{i}e_{j}R_{i}R_{j}", "C_ij from O_ij",
                    -(r.O((i, j)) * r.blade(i, j) * r.P_S((i, j))), r.C(i, j))
    for i in (1, 2, 3):
        yield Check(f"C_{i} = O_{i}e_{i}R_{i}", "C_i from O_i", r.O((i,)) * r.E[i] * r.R[i], r.C(i))


def _bi_reduction(r: Realization):
    zero = r.one * 0
    if r.kind == "z2-scalar":
        C, G = r.C, r.gamma()
        mu = r.mu
        for i in (1, 2, 3):
            yield Check(f"C_{i} = mu{i}", "one-index elements are constants", C(i), r.one * mu(i))
        for (i, j), k in zip(PAIRS, (3, 2, 1)):
            yield Check(f"[C_{i}{j},C_{k}] = 0", "cyclic relation trivializes", commutator(C(i, j), C(k)), zero)
        for i, j, k in TRIPLES:
            yield Check(
                f"{{C_{i}{j},C_{j}{k}}} = C_{i}{k} + 2mu{j}Gamma + 2mu{i}mu{k}", "Bannai-Ito relations",
                anticommutator(C(*_pair(i, j)), C(*_pair(j, k))),
                C(*_pair(i, k)) + G * (mu(j) * 2) + r.one * (mu(i) * mu(k) * 2),
            )
        return
    r0 = r.specialize({"a": 0})
    C, G, b = r0.C, r0.gamma(), r0.b
    for i in (1, 2, 3):
        yield Check(f"C_{i} = b at a=0", "one-index elements are constants", C(i), r0.one * b)
    for i, j, k in TRIPLES:
        yield Check(
            f"{{C_{i}{j},C_{j}{k}}} = C_{i}{k} + 2Gamma b + 2b^2 at a=0", "Bannai-Ito relations",
            anticommutator(C(*_pair(i, j)), C(*_pair(j, k))),
            C(*_pair(i, k)) + G * (b * 2) + r0.one * (b * b * 2),
        )


_ALL = ("b3-scalar", "z2-scalar", "b3-clifford")

# name -> (body, realizations it applies to)
SUITES = {
    "osp-core": (_osp_core, _ALL),
    "involutions": (_involutions, _ALL),
    "centralize": (_centralize, _ALL),
    "index-lemmas": (_index_lemmas, _ALL),
    "casimir-decomp": (_casimir_decomp, _ALL),
    "theorem-3-7": (_theorem, _ALL),
    "closed-forms": (_closed_forms, ("b3-scalar", "b3-clifford")),
    "hyperoct-structure": (_hyperoct, ("b3-scalar",)),
    "casimir-invariant": (_casimir_invariant, ("b3-scalar",)),
    "clifford": (_clifford, ("b3-clifford",)),
    "bi-reduction": (_bi_reduction, _ALL),
}


def suite_names() -> list[str]:
    return list(SUITES)


def suites_for(kind: str) -> list[str]:
    return [name for name, (_, kinds) in SUITES.items() if kind in kinds]


def build_suite(suite: str, r: Realization) -> list[Check]:
    if suite not in SUITES:
        raise KeyError(f"unknown suite {suite!r}; expected one of {suite_names()}")
    body, kinds = SUITES[suite]
    if r.kind not in kinds:
        raise ValueError(f"suite {suite!r} does not apply to {r.kind}")
    checks = list(body(r))
    labels = [c.label for c in checks]
    if len(set(labels)) != len(labels):
        raise AssertionError(f"duplicate labels in suite {suite}")
    return checks


def verify_suite(suite: str, r: Realization, degree: int, timings: bool = True) -> SuiteReport:
    """Run every check of ``suite`` against ``r`` up to ``degree``."""
    if degree < 0:
        raise ValueError("degree must be >= 0")
    report = SuiteReport(suite, r.kind, degree)
    for check in build_suite(suite, r):
        report.results.append(run_check(check, r, degree, timings))
    return report
