import json
from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kahler_spectra import diophantine
from kahler_spectra.classifier import Q1Verdict, Q2Verdict, classify, verify_lastlemma


def test_p0_is_rigid():
    r = classify(0, 10)
    assert r.q1_verdict is Q1Verdict.RIGID_BY_LEMMA
    assert r.q2_verdict is Q2Verdict.RIGID
    assert r.theorem1_case == 1
    assert r.requires_cohomological_einstein
    assert r.warnings == ()


def test_28_needs_fujita():
    r = classify(2, 8)
    assert r.q1_verdict is Q1Verdict.LAMBDA1_ZERO
    assert r.q2_verdict is Q2Verdict.RIGID_VIA_FUJITA
    assert "Fujita" in r.citation
    assert r.theorem1_case is None
    assert not r.requires_cohomological_einstein


def test_exceptional_pair_is_open():
    r = classify(20, 48)
    assert r.degenerate
    assert r.q1_verdict is Q1Verdict.DEGENERATE_PAIR
    assert r.q1_label == "DegeneratePair(2)"
    assert r.q2_verdict is Q2Verdict.OPEN
    assert r.theorem1_case is None


def test_p1_small_n_fails():
    r = classify(1, 4)
    assert r.q1_verdict is Q1Verdict.CONDITION_FAILS
    assert r.theorem1_case is None
    assert r.warnings == ()


@pytest.mark.parametrize("n", [6, 7])
def test_published_p1_cases_flagged(n):
    r = classify(1, n)
    assert r.theorem1_case == 2
    assert r.q1_verdict is Q1Verdict.CONDITION_FAILS
    assert r.q2_verdict is Q2Verdict.OPEN
    assert len(r.warnings) == 1 and "published case (2)" in r.warnings[0]


def test_p1_n8_agrees():
    r = classify(1, 8)
    assert r.q1_verdict is Q1Verdict.RIGID_BY_LEMMA and r.warnings == ()


def test_dimension_one():
    assert classify(0, 1).q1_verdict is Q1Verdict.RIGID_BY_LEMMA
    assert classify(2, 1).q1_verdict is Q1Verdict.RIGID_BY_LEMMA  # folds to p = 0
    r = classify(1, 1)
    assert r.q1_verdict is Q1Verdict.CONDITION_FAILS
    assert any("n >= 2" in w for w in r.warnings)


@pytest.mark.parametrize("p, n", [(-1, 3), (7, 3), (0, 0)])
def test_range_errors(p, n):
    with pytest.raises(ValueError):
        classify(p, n)


def test_cohomological_einstein_flag():
    assert classify(4, 10).requires_cohomological_einstein is False
    assert classify(3, 10).requires_cohomological_einstein is True
    assert classify(16, 10).requires_cohomological_einstein is False  # folds to 4


@given(st.integers(1, 120), st.data())
def test_duality_invariance(n, data):
    p = data.draw(st.integers(0, 2 * n))
    assert classify(p, n) == classify(2 * n - p, n)


@given(st.integers(1, 200), st.data())
def test_verdict_soundness(n, data):
    p = data.draw(st.integers(0, n))
    r = classify(p, n)
    rigid = (not r.degenerate and r.reduced_coeff > 0 and r.lambdas.lambda1 > 0)
    assert (r.q1_verdict is Q1Verdict.RIGID_BY_LEMMA) == rigid
    if r.q1_verdict is Q1Verdict.RIGID_BY_LEMMA:
        assert r.numerical_ok and not r.degenerate
    if r.q1_verdict is Q1Verdict.LAMBDA1_ZERO:
        assert (r.p, r.n) == (2, 8)
    assert (r.q2_verdict is Q2Verdict.RIGID_VIA_FUJITA) == ((r.p, r.n) == (2, 8))


def test_degenerate_cells_match_enumeration():
    limit = 700
    found = {(p, n) for n in range(1, limit + 1) for p in range(0, n + 1) if classify(p, n).degenerate}
    assert found == {(x.p, x.n) for x in diophantine.enumerate_bruteforce(limit)}


def test_json_fields():
    data = classify(2, 8).to_json()
    assert data["q2_verdict"] == "RigidViaFujita"
    assert data["lambdas"] == {"lambda1": "0", "lambda2": "13/3", "lambda3": "-1/6"}
    assert data["reduced_coeff"] == "2"
    json.dumps(data)


def test_lastlemma_small():
    rep = verify_lastlemma(10)
    assert set(rep.diff) <= {(1, 6), (1, 7)}
    assert rep.claimed_not_computed == [(1, 6), (1, 7)]
    assert rep.computed_not_claimed == []


def test_lastlemma_n2():
    rep = verify_lastlemma(2)
    assert rep.computed == {(0, 2), (2, 2)}
    assert rep.diff == []


def test_lastlemma_excludes_28():
    rep = verify_lastlemma(8)
    assert (2, 8) not in rep.computed
    assert (2, 7) in rep.computed
    row = next(r for r in rep.boundary_rows if (r["p"], r["n"]) == (2, 8))
    assert row["lambda1"] == "0" and not row["holds"]


def test_lastlemma_boundary_rows_cover_p_le_2():
    rep = verify_lastlemma(12)
    assert len(rep.boundary_rows) == 3 * 11
    assert {(r["p"], r["n"]) for r in rep.boundary_rows} == {
        (p, n) for n in range(2, 13) for p in range(0, min(2, n) + 1)}


def test_lastlemma_rejects_small_max_n():
    with pytest.raises(ValueError):
        verify_lastlemma(1)
