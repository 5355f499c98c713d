import pytest

from bannai_ito.exactring import mpq
from bannai_ito.hyperoct import GroupAlgebraElement, reflection, transposition
from bannai_ito.realization import realize
from bannai_ito.suites import SUITES, build_suite, suite_names, suites_for, verify_suite

KINDS = ["b3-scalar", "z2-scalar", "b3-clifford"]


@pytest.fixture(scope="module")
def realizations():
    return {k: realize(k, check_degree=None) for k in KINDS}


@pytest.mark.parametrize("kind", KINDS)
def test_every_applicable_suite_passes_at_low_degree(realizations, kind):
    r = realizations[kind]
    for name in suites_for(kind):
        report = verify_suite(name, r, 3, timings=False)
        assert report.passed, (name, [f.label for f in report.failures()])


def test_suite_registry():
    assert suite_names() == list(SUITES)
    assert "hyperoct-structure" not in suites_for("z2-scalar")
    assert "clifford" in suites_for("b3-clifford")
    assert "clifford" not in suites_for("b3-scalar")


def test_labels_are_unique(realizations):
    for kind, r in realizations.items():
        for name in suites_for(kind):
            labels = [c.label for c in build_suite(name, r)]
            assert len(labels) == len(set(labels))


def test_inapplicable_suite_is_rejected(realizations):
    with pytest.raises(ValueError):
        verify_suite("clifford", realizations["b3-scalar"], 2)
    with pytest.raises(KeyError):
        verify_suite("no-such-suite", realizations["b3-scalar"], 2)


def test_expect_differ_checks_pass_when_operators_differ(realizations):
    report = verify_suite("centralize", realizations["b3-scalar"], 3, timings=False)
    differ = [res for res in report.results if res.expect == "differ"]
    assert differ and all(res.status == "pass" for res in differ)


def test_report_shape(realizations):
    d = verify_suite("osp-core", realizations["b3-scalar"], 2, timings=False).to_dict()
    assert set(d) == {"name", "realization", "status", "identities"}
    item = d["identities"][0]
    assert item["wall_time"] is None and item["witness"] is None
    assert set(item) == {"label", "anchor", "expect", "status", "degree", "checked", "witness", "wall_time"}


def test_wrong_q13_breaks_the_hyperoctahedral_suite(realizations):
    r = realizations["b3-scalar"]
    E = lambda g: GroupAlgebraElement.of(g, r.ring.params)  # noqa: E731
    R1, R2, R3 = (E(reflection(3, i)) for i in (1, 2, 3))
    bad = (R1 + R2 - R1 * R2 * R3) * E(transposition(3, 1, 3)) * mpq(1, 2)
    report = verify_suite("hyperoct-structure", r.with_q((1, 3), bad), 3, timings=False)
    assert not report.passed
    failed = report.failures()
    assert all(f.witness is not None for f in failed)
