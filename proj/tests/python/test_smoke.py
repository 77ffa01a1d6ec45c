import json
import pathlib

import pytest

import preadj

DATA = pathlib.Path(__file__).resolve().parent.parent / "data"


def test_compose_worked_example():
    u = "0 x1 0 0 x2 0 x1 x3 x3 x4 x2 x5 x6 0 x7 x1"
    h = "0 x1 x2 x3 x1 x4 x5"
    assert preadj.compose(u, h) == "0 0 0 0 x1 0 0 x2 x2 x3 x1 x1 x4 0 x5 0"


def test_compose_rejects_bad_words():
    with pytest.raises(preadj.DomainError):
        preadj.compose("x2 x1", "0 x1")
    with pytest.raises(ValueError):
        preadj.compose("0 x1", "x1 x2")


def test_enumerate_words():
    assert preadj.enumerate_words(2, 1) == ["0 x1", "x1 0", "x1 x1"]
    assert len(preadj.enumerate_words(3, 1, alphabet="0,1")) == 19
    with pytest.raises(preadj.BudgetExceeded):
        preadj.enumerate_words(8, 3, bound=10)


def test_tight_completion():
    assert preadj.tight_complete("0,1,5") == "0,1,2,3,4,5"
    assert preadj.is_tight("0,2,3,5")
    assert not preadj.is_tight("0,1,5")


def test_decide_gr():
    assert not preadj.decide_gr(3, 2, 1)["holds"]
    r = preadj.decide_gr(5, 2, 1)
    assert r["holds"]
    assert r["bad_coloring"] is None
    assert r["counts"]["hom_AC"] == 31


def test_worked_example_and_control():
    checks = preadj.worked_example()
    assert len(checks) == 25
    assert all(expected == actual for _, expected, actual in checks)
    corrupted = preadj.worked_example(corrupt="h")
    assert any(expected != actual for _, expected, actual in corrupted)


@pytest.mark.parametrize("kind", ["graph", "poset", "ultrametric"])
def test_pa_suites(kind):
    r = preadj.pa_random_suite(kind, trials=50, seed=1)
    assert r["trials"] == 50
    assert r["failing_seeds"] == []


def test_run_matches_cli_contract():
    status, out, _ = preadj.run(["--format", "json", "spectrum", "tighten", "--values", "0,1,5"])
    assert status == 0
    assert json.loads(out)["values"] == ["0", "1", "2", "3", "4", "5"]
    status, _, err = preadj.run(["word", "validate", "--word", "x2 x1"])
    assert status == 1
    assert err.startswith("error: ")
    chain = str(DATA / "chain1.json")
    status, out, _ = preadj.run(
        ["--format", "json", "arrow", "decide", "--kind", "poset", "--A", chain,
         "--B", str(DATA / "chain2.json"), "--C", str(DATA / "chain3.json")])
    assert status == 0
    assert json.loads(out)["verdict"] == "holds"
