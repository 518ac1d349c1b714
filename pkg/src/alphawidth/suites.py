"""Named property suites evaluated graph by graph over a graph6 stream."""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field
from multiprocessing import Pool
from typing import Callable, Iterable

from .brambles import alpha_order_exact, is_strong_bramble, strong_bramble_of_order
from .domination import dominates, dominating_cycle_or_vertex, dominating_path
from .graph import (
    Graph,
    GraphFormatError,
    bits,
    contains_induced,
    cycle_graph,
    is_chordal,
    is_connected,
    is_induced_cycle,
    is_induced_path,
    is_k1d_free,
    path_graph,
)
from .induced_minor import (
    InducedMinorModel,
    check_vicinity,
    detect_wheel,
    find_induced_minor,
    has_induced_minor_by_reduction,
    is_model,
    pattern_from_name,
    wheel_graph,
)
from .io import parse_graph6, read_graph6_stream
from .treedepth import EliminationForest, alpha_depth, alpha_td_exact, alpha_td_path_formula, path_elimination_tree
from .width import (
    alpha_tw_exact,
    alpha_width,
    check_tree_decomposition,
    is_k_alpha_linked,
    refine_decomposition,
)

WORKERS_ENV = "ALPHAWIDTH_WORKERS"


class Skip(Exception):
    """The graph is outside the suite's domain."""


def _is_path(G: Graph) -> bool:
    return G.n >= 1 and is_connected(G) and G.num_edges() == G.n - 1 and all(G.degree(v) <= 2 for v in range(G.n))


def _treedepth_formula(G: Graph, p: dict) -> dict:
    if not _is_path(G):
        raise Skip("not a path")
    value, F = alpha_td_exact(G)
    formula = alpha_td_path_formula(G.n)
    # lay the construction onto G's own path order
    order = [min(v for v in range(G.n) if G.degree(v) <= 1)]
    while len(order) < G.n:
        prev = order[-2] if len(order) > 1 else None
        order.append(next(u for u in bits(G.adj[order[-1]]) if u != prev))
    built = path_elimination_tree(G.n)
    parent: list[int | None] = [None] * G.n
    for i, pi in enumerate(built.parent):
        parent[order[i]] = None if pi is None else order[pi]
    constructed = alpha_depth(G, EliminationForest(tuple(parent)))
    ok = value == formula == constructed and alpha_depth(G, F) == value
    return {"ok": ok, "values": {"k": G.n, "alpha_td": value, "formula": formula, "construction": constructed}}


def _td_vs_tw(G: Graph, p: dict) -> dict:
    tw, _ = alpha_tw_exact(G)
    td, _ = alpha_td_exact(G)
    return {"ok": tw <= td, "values": {"alpha_tw": tw, "alpha_td": td}}


def _chordal_char(G: Graph, p: dict) -> dict:
    tw, _ = alpha_tw_exact(G)
    chordal = is_chordal(G)
    return {"ok": (tw <= 1) == chordal, "values": {"alpha_tw": tw, "chordal": chordal}}


def _quasi_threshold_char(G: Graph, p: dict) -> dict:
    td, _ = alpha_td_exact(G)
    free = contains_induced(G, path_graph(4)) is None and contains_induced(G, cycle_graph(4)) is None
    return {"ok": (td <= 1) == free, "values": {"alpha_td": td, "p4_c4_free": free}}


def _duality(G: Graph, p: dict) -> dict:
    k = p.get("k", 1)
    tw, _ = alpha_tw_exact(G)
    B = strong_bramble_of_order(G, k)
    values: dict = {"alpha_tw": tw, "k": k, "bramble": B is not None}
    if B is None:
        ok = tw < 4 * k - 2
        return {"ok": ok, "values": values, **({} if ok else {"reason": "alpha-tw >= 4k-2 but no bramble"})}
    order, _ = alpha_order_exact(G, B)
    values["alpha_order"] = order
    ok = bool(is_strong_bramble(G, B)) and order >= k and tw >= order
    return {"ok": ok, "values": values}


def _refine(G: Graph, p: dict) -> dict:
    k = p.get("k", 1)
    res = refine_decomposition(G, k)
    if res.decomposition is not None:
        ok = bool(check_tree_decomposition(G, res.decomposition)) and alpha_width(G, res.decomposition) <= 2 * k + 1
        return {"ok": ok, "values": {"outcome": "decomposition", "fallback": res.fallback}}
    ok = is_k_alpha_linked(G, res.linked_set, k)
    return {"ok": ok, "values": {"outcome": "linked", "fallback": res.fallback}}


def _small_model(G: Graph, p: dict) -> dict:
    names = p.get("patterns", ["K3", "P4", "K4", "C4"])
    values = {}
    ok = True
    for name in names:
        H = pattern_from_name(name)
        small = find_induced_minor(G, H, small_only=True)
        full = find_induced_minor(G, H, small_only=False)
        values[name] = small is not None
        ok &= (small is None) == (full is None)
        if small is not None:
            ok &= bool(is_model(G, H, small))
    return {"ok": ok, "values": values}


def _wheel_dichotomy(G: Graph, p: dict) -> dict:
    d, ell = p.get("d", 3), p.get("l", 4)
    if not is_k1d_free(G, d)[0]:
        raise Skip(f"contains K_1,{d}")
    out = detect_wheel(G, d, ell)
    oracle = has_induced_minor_by_reduction(G, wheel_graph(ell))
    if isinstance(out, InducedMinorModel):
        ok = oracle and bool(is_model(G, wheel_graph(ell), out))
        return {"ok": ok, "values": {"model": True}}
    ok = not oracle and bool(check_tree_decomposition(G, out.decomposition))
    if out.vicinity is not None:
        ok &= bool(check_vicinity(G, out.cycle, out.vicinity))
    return {"ok": ok, "values": {"model": False, "alpha_tw": out.alpha_tw, "vicinity": out.vicinity is not None}}


def _domination(G: Graph, p: dict) -> dict:
    k = p.get("k", 1)
    B = strong_bramble_of_order(G, k)
    if B is None or not B.elements:
        raise Skip("no bramble")
    P = dominating_path(G, B)
    ok = is_induced_path(G, P) and dominates(G, B, P)
    out = dominating_cycle_or_vertex(G, B)
    if isinstance(out, int):
        ok &= dominates(G, B, [out])
        kind = "vertex"
    else:
        ok &= is_induced_cycle(G, out) and dominates(G, B, out)
        kind = f"cycle{len(out)}"
    return {"ok": ok, "values": {"path_len": len(P), "outcome": kind}}


SUITES: dict[str, Callable[[Graph, dict], dict]] = {
    "duality": _duality,
    "treedepth-formula": _treedepth_formula,
    "td-vs-tw": _td_vs_tw,
    "chordal-char": _chordal_char,
    "quasi-threshold-char": _quasi_threshold_char,
    "refine": _refine,
    "small-model": _small_model,
    "wheel-dichotomy": _wheel_dichotomy,
    "domination": _domination,
}


@dataclass
class RunReport:
    suite: str
    params: dict
    outcomes: list[dict] = field(default_factory=list)
    wall_time: float = 0.0

    @property
    def counts(self) -> dict[str, int]:
        out = {"pass": 0, "fail": 0, "skip": 0, "error": 0}
        for o in self.outcomes:
            out[o["status"]] += 1
        return out

    @property
    def failures(self) -> list[dict]:
        return [o for o in self.outcomes if o["status"] in ("fail", "error")]

    def to_json(self) -> dict:
        # wall time is left out so reports are identical across runs
        return {"suite": self.suite, "params": self.params, "counts": self.counts, "outcomes": self.outcomes}

    def summary(self) -> str:
        c = self.counts
        lines = [f"suite {self.suite} {self.params}"]
        lines.append(f"  graphs {len(self.outcomes)}  pass {c['pass']}  fail {c['fail']}  skip {c['skip']}  error {c['error']}")
        lines.append(f"  wall time {self.wall_time:.2f}s")
        for o in self.failures:
            lines.append(f"  {o['status'].upper()} #{o['index']} {o['graph6']}: {o.get('reason', '')}")
        return "\n".join(lines)


def evaluate(name: str, code: str, params: dict) -> dict:
    """Run one suite check on one graph6 code; never raises."""
    try:
        G = parse_graph6(code)
        res = SUITES[name](G, params)
    except Skip as exc:
        return {"status": "skip", "reason": str(exc)}
    except GraphFormatError as exc:
        return {"status": "error", "reason": f"parse error: {exc}"}
    except Exception as exc:  # a library bug is a reportable outcome, not a crash
        return {"status": "error", "reason": f"{type(exc).__name__}: {exc}"}
    out = {"status": "pass" if res["ok"] else "fail", "values": res.get("values", {})}
    if not res["ok"]:
        out["reason"] = res.get("reason", "property violated")
    return out


def _evaluate_star(args):
    return evaluate(*args)


def worker_count(requested: int | None = None) -> int:
    if requested is not None:
        return max(1, requested)
    return max(1, int(os.environ.get(WORKERS_ENV, "1")))


def run_suite(name: str, stream: Iterable[str], params: dict | None = None, workers: int | None = None, strict: bool = False, warn: Callable[[str], None] | None = None, max_n: int | None = None) -> RunReport:
    """Evaluate suite ``name`` on every graph6 line of ``stream`` in input order."""
    if name not in SUITES:
        raise KeyError(f"unknown suite {name!r}; choose from {', '.join(sorted(SUITES))}")
    params = dict(params or {})
    start = time.perf_counter()
    report = RunReport(name, params)
    items = []
    for idx, line, parsed in read_graph6_stream(stream, strict=strict):
        if isinstance(parsed, GraphFormatError):
            if warn is not None:
                warn(f"line {idx + 1}: skipped malformed graph6 ({parsed})")
            continue
        if max_n is not None and parsed.n > max_n:
            continue
        items.append((idx, line))
    jobs = [(name, code, params) for _, code in items]
    n_workers = worker_count(workers)
    if n_workers > 1 and len(jobs) > 1:
        with Pool(n_workers) as pool:
            results = pool.map(_evaluate_star, jobs, chunksize=max(1, len(jobs) // (4 * n_workers)))
    else:
        results = [_evaluate_star(j) for j in jobs]
    for (idx, code), res in zip(items, results):
        entry = {"index": idx, "graph6": code, **res}
        if res["status"] in ("fail", "error"):
            entry["replay"] = f"echo '{code}' | alphawidth suite {name}" + "".join(
                f" --{k} {','.join(v) if isinstance(v, list) else v}" for k, v in sorted(params.items())
            )
        report.outcomes.append(entry)
    report.wall_time = time.perf_counter() - start
    return report
