import json

import pytest

from gkrecog.ledger import ASSUMED, FAIL, PASS, CheckResult, render, run_ledger
from gkrecog.search import SearchBounds


@pytest.fixture(scope="module")
def minus():
    return run_ledger("minus")


@pytest.fixture(scope="module")
def plus():
    return run_ledger("plus")


def ids(ledger):
    return [r.id for r in ledger.results]


def test_minus_has_no_failures(minus):
    assert minus.failed == []
    assert "{19,37,73}" in minus.get("C04").detail
    assert minus.get("C18").status == PASS


def test_plus_has_no_failures(plus):
    assert plus.failed == []
    assert plus.get("C07").detail == "757"
    assert plus.get("C18").status == PASS


def test_check_order_and_ids(minus, plus):
    for ledger in (minus, plus):
        assert len(set(ids(ledger))) == len(ids(ledger))
        numbered = [i for i in ids(ledger) if not i.startswith("C12")]
        assert numbered == sorted(numbered)
        assert ids(ledger)[-1] == "C18"
    assert "C09" in ids(minus) and "C11" not in ids(minus)
    assert "C11" in ids(plus) and "C09" not in ids(plus)
    assert [i for i in ids(minus) if i.startswith("C12")] == ["C12.1"]
    assert len([i for i in ids(plus) if i.startswith("C12")]) == 9


def test_assumed_entries_carry_citations(minus, plus):
    for ledger in (minus, plus):
        assumed = [r for r in ledger.results if r.status == ASSUMED]
        assert assumed
        assert all(r.citation for r in assumed)
        assert ledger.get("C05").status == ASSUMED
        for r in assumed:
            assert r.id in ledger.get("C18").detail


def test_summary_counts_match(minus, plus):
    for ledger in (minus, plus):
        s = ledger.summary
        assert s["pass"] + s["fail"] + s["assumed"] == len(ledger.results)
        assert s["assumed"] == sum(r.status == ASSUMED for r in ledger.results)


def test_starved_bounds_fail_c10():
    starved = SearchBounds().with_q_cap("L2", 72)
    ledger = run_ledger("minus", starved)
    c10 = ledger.get("C10")
    assert c10.status == FAIL
    assert "L(2,73)" in c10.detail
    assert ledger.get("C18").status == FAIL


def test_missing_plus_candidate_fails_c10():
    ledger = run_ledger("plus", SearchBounds().with_q_cap("S", 700))
    c10 = ledger.get("C10")
    assert c10.status == FAIL
    assert "expected" in c10.detail and "actual" in c10.detail
    assert "S(4,757)" in c10.detail


def test_render_text(minus, plus):
    text = render(minus, "text")
    line = next(l for l in text.splitlines() if l.startswith("C02"))
    assert line.startswith("C02 PASS")
    assert "5" in line
    assert " — " in line
    assert render(plus, "text").count(" ASSUMED ") >= 1


def test_render_json_round_trip(minus, plus):
    for ledger in (minus, plus):
        data = json.loads(render(ledger, "json"))
        assert data["summary"] == ledger.summary
        assert data["epsilon"] == ledger.epsilon
        assert [r["id"] for r in data["results"]] == ids(ledger)
        assert set(data["results"][0]) >= {"id", "lemma", "status", "detail", "citation"}


def test_render_is_deterministic():
    a = render(run_ledger("minus"), "json")
    b = render(run_ledger("minus"), "json")
    assert a == b


def test_check_result_invariants():
    with pytest.raises(ValueError):
        CheckResult("X", "l", "d", ASSUMED, "detail")
    with pytest.raises(ValueError):
        CheckResult("X", "l", "d", "MAYBE", "detail")


def test_bad_epsilon():
    with pytest.raises(ValueError):
        run_ledger("zero")
