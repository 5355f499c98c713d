"""Acceptance gate: eleven criteria, exact arithmetic, degree bound 6.

Each test prints a single PASS/FAIL line.  Two criteria assert relations in
the literal form they are usually quoted in; those forms are false and the
tests fail on purpose (see /root/notes/decisions.md for the analysis).
"""
import pytest

from bannai_ito.exactring import mpq
from bannai_ito.hyperoct import GroupAlgebraElement, reflection, transposition
from bannai_ito.opcalc import commutator
from bannai_ito.realization import realize
from bannai_ito.suites import PAIRS, Check, build_suite, run_check, verify_suite

DEGREE = 6
KINDS = ("b3-scalar", "z2-scalar", "b3-clifford")


@pytest.fixture(scope="module")
def R():
    return {k: realize(k, check_degree=None) for k in KINDS}


def checks_from(r, suite, anchors=None, drop=()):
    return [c for c in build_suite(suite, r) if (anchors is None or c.anchor in anchors) and c.label not in drop]


def gate(capsys, number, title, jobs):
    """Run (realization, checks) pairs; print one line; return failing results."""
    failures, total = [], 0
    for r, checks in jobs:
        for c in checks:
            total += 1
            res = run_check(c, r, DEGREE, timings=False)
            if res.status != "pass":
                failures.append((r.kind, res))
    with capsys.disabled():
        if failures:
            kind, res = failures[0]
            print(f"\n[criterion {number:2d}] FAIL {title}: {len(failures)}/{total} identities fail; "
                  f"first {res.label} ({kind}) witness {res.witness}")
        else:
            print(f"\n[criterion {number:2d}] PASS {title}: {total} identities")
    return failures


def test_criterion_01_dunkl_core(R, capsys):
    jobs = []
    for kind in ("b3-scalar", "z2-scalar"):
        r, zero = R[kind], R[kind].one * 0
        checks = [Check(f"[D_{i},D_{j}] = 0", "", commutator(r.D[i], r.D[j]), zero) for i, j in PAIRS]
        checks += [Check(f"[D_{i},x_{j}] = S_{i}{j}", "", r.S_commutator(i, j), r.S(i, j))
                   for i in (1, 2, 3) for j in (1, 2, 3)]
        jobs.append((r, checks))
    assert not gate(capsys, 1, "Dunkl operators commute and [D_i,x_j] = S_ij", jobs)


def test_criterion_02_osp_realization_literal_constant(R, capsys):
    jobs = []
    for r in R.values():
        G = r.gamma()
        checks = checks_from(r, "osp-core", drop={"Gamma^2 - Gamma P = 4C + 3/4"})
        # the relation as usually quoted, with constant 3/2
        checks.append(Check("Gamma^2 - Gamma P = 4C + 3/2", "", G * G - G * r.P, r.sl2_casimir() * 4 + r.one * mpq(3, 2)))
        jobs.append((r, checks))
    failures = gate(capsys, 2, "osp(1,2) relations with Gamma^2 - Gamma P = 4C + 3/2", jobs)
    assert not failures


def test_criterion_03_supplementary_involutions(R, capsys):
    assert not gate(capsys, 3, "supplementary involutions and the involution lemma",
                    [(r, checks_from(r, "involutions")) for r in R.values()])


def test_criterion_04_centralization(R, capsys):
    anchors = {"C_S centralizes osp(1,2)", "C_S commutes with Gamma"}
    assert not gate(capsys, 4, "C_S centralizes osp(1,2) and commutes with Gamma",
                    [(r, checks_from(r, "centralize", anchors)) for r in R.values()])


def test_criterion_05_structure_theorems(R, capsys):
    jobs = [(r, checks_from(r, "index-lemmas") + checks_from(r, "casimir-decomp") + checks_from(r, "theorem-3-7"))
            for r in R.values()]
    assert not gate(capsys, 5, "index lemmas, Gamma decomposition and the anticommutator theorem", jobs)


def test_criterion_06_closed_form_coherence(R, capsys):
    forms = {"two bracket forms agree", "expanded form agrees"}
    jobs = [(r, checks_from(r, "centralize", forms)) for r in R.values()]
    jobs += [(R[k], checks_from(R[k], "closed-forms")) for k in ("b3-scalar", "b3-clifford")]
    jobs.append((R["b3-scalar"], checks_from(R["b3-scalar"], "hyperoct-structure",
                                             {"two-index from one-index", "one-index elements from Q"})))
    jobs.append((R["b3-clifford"], checks_from(R["b3-clifford"], "clifford", {"O_ij closed form", "a=0 reduction"})))
    assert not gate(capsys, 6, "all constructions and closed forms agree", jobs)


def test_criterion_07_hyperoctahedral_layer(R, capsys):
    r = R["b3-scalar"]
    assert not gate(capsys, 7, "hyperoctahedral structure", [(r, checks_from(r, "hyperoct-structure"))])


def test_criterion_08_casimir_layer(R, capsys):
    r = R["b3-scalar"]
    assert not gate(capsys, 8, "Casimir invariance and Casimir in terms of Gamma",
                    [(r, checks_from(r, "casimir-invariant"))])


def test_criterion_09_clifford_layer_literal_correspondence(R, capsys):
    r = R["b3-clifford"]
    checks = checks_from(r, "clifford", {"O_S parity", "Z_i anticommute", "C_i from O_i"})
    for i, j in PAIRS:
        # the two-index correspondence as usually quoted, without the sign
        checks.append(Check(f"C_{i}{j} = O_{i}{j}e_{i}e_{j}R_{i}R_{j}", "",
                            r.O((i, j)) * r.blade(i, j) * r.P_S((i, j)), r.C(i, j)))
    assert not gate(capsys, 9, "O_S parity, Z_i anticommutation and C_S = O_S e_S R_S", [(r, checks)])


def test_criterion_10_bannai_ito_reductions(R, capsys):
    assert not gate(capsys, 10, "reductions to the Bannai-Ito algebra",
                    [(R[k], checks_from(R[k], "bi-reduction")) for k in ("z2-scalar", "b3-scalar")])


def test_criterion_11_negative_control(R, capsys):
    r = R["b3-scalar"]
    E = lambda g: GroupAlgebraElement.of(g, r.ring.params)  # noqa: E731
    R1, R2, R3 = (E(reflection(3, i)) for i in (1, 2, 3))
    bad = r.with_q((1, 3), (R1 + R2 - R1 * R2 * R3) * E(transposition(3, 1, 3)) * mpq(1, 2))
    report = verify_suite("hyperoct-structure", bad, DEGREE, timings=False)
    failed = report.failures()
    ok = bool(failed) and all(f.witness is not None for f in failed)
    with capsys.disabled():
        verdict = "PASS" if ok else "FAIL"
        first = f"first {failed[0].label} witness {failed[0].witness}" if failed else "suite passed"
        print(f"\n[criterion 11] {verdict} sign-flipped Q_13 is caught: {len(failed)} failures; {first}")
    assert ok
