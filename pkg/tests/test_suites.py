import pytest

from alphawidth.enumerate import graphs_of_order
from alphawidth.graph import path_graph
from alphawidth.io import emit_graph6
from alphawidth.suites import SUITES, evaluate, run_suite, worker_count

SMALL = [code for n in range(1, 6) for code in graphs_of_order(n)]


@pytest.mark.parametrize("name", sorted(SUITES))
def test_every_suite_passes_on_small_graphs(name):
    report = run_suite(name, SMALL)
    assert report.counts["fail"] == 0 and report.counts["error"] == 0
    assert report.counts["pass"] + report.counts["skip"] == len(SMALL)


def test_treedepth_formula_suite_on_paths():
    report = run_suite("treedepth-formula", [emit_graph6(path_graph(k)) for k in range(1, 13)])
    assert report.counts["pass"] == 12
    assert [o["values"]["alpha_td"] for o in report.outcomes][:4] == [1, 1, 1, 2]


def test_errors_are_reported_not_raised():
    out = evaluate("chordal-char", "D?", {})
    assert out["status"] == "error" and "parse error" in out["reason"]
    big = emit_graph6(path_graph(20))
    out = evaluate("chordal-char", big, {})
    assert out["status"] == "error" and "SizeCapError" in out["reason"]


def test_failures_carry_replay_commands(monkeypatch):
    monkeypatch.setitem(SUITES, "always-fails", lambda G, p: {"ok": False, "reason": "nope"})
    report = run_suite("always-fails", ["A_"], {"k": 2})
    (o,) = report.failures
    assert o["replay"] == "echo 'A_' | alphawidth suite always-fails --k 2"
    assert "FAIL #0 A_: nope" in report.summary()
    assert "wall_time" not in report.to_json()


def test_unknown_suite_and_workers(monkeypatch):
    with pytest.raises(KeyError):
        run_suite("no-such-suite", [])
    monkeypatch.setenv("ALPHAWIDTH_WORKERS", "4")
    assert worker_count() == 4
    assert worker_count(0) == 1


def test_max_n_filter():
    report = run_suite("chordal-char", SMALL, max_n=3)
    assert len(report.outcomes) == sum(len(graphs_of_order(n)) for n in range(1, 4))
