"""Command-line front end: ``alphawidth <verb> ...``.

Exit status: 0 success, 1 a property or certificate check failed, 2 usage or
parse error.
"""

from __future__ import annotations

import argparse
import contextlib
import json
import sys
from typing import Sequence, TextIO

from .brambles import StrongBramble, alpha_order_exact, check_bramble_certificate, is_strong_bramble, strong_bramble_of_order
from .domination import dominating_cycle_or_vertex, dominating_path
from .enumerate import all_graphs
from .graph import Graph, GraphFormatError, PreconditionError, SizeCapError, independence_number, to_list
from .induced_minor import InducedMinorModel, detect_wheel, is_model, pattern_from_name
from .io import emit_dimacs, emit_dot, emit_graph6, read_graph, read_graph6_stream
from .suites import SUITES, run_suite
from .treedepth import EliminationForest, alpha_depth, alpha_td_exact, is_elimination_forest
from .width import TreeDecomposition, alpha_tw_exact, alpha_width, check_tree_decomposition, treewidth_exact


class UsageError(Exception):
    pass


def _open(path: str):
    if path == "-":
        return contextlib.nullcontext(sys.stdin)
    try:
        return open(path)
    except OSError as exc:
        raise UsageError(f"cannot open {path}: {exc.strerror}") from None


def _load_json(path: str) -> dict:
    try:
        with _open(path) as fh:
            return json.load(fh)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{path}: invalid JSON at line {exc.lineno} column {exc.colno}") from None


def _graph(args) -> Graph:
    with _open(args.graph) as fh:
        return read_graph(fh, args.format)


def _emit(obj: dict, out: TextIO) -> None:
    out.write(json.dumps(obj, sort_keys=False) + "\n")


# ---------------------------------------------------------------------------
# verbs


def cmd_param(args, out: TextIO) -> int:
    wanted = [name for name in ("alpha", "alpha_tw", "alpha_td", "tw") if getattr(args, name)]
    if not wanted:
        wanted = ["alpha", "alpha_tw", "alpha_td", "tw"]
    with _open(args.graph) as fh:
        text = fh.read()
    if args.format == "dimacs" or (args.format == "auto" and text.lstrip()[:1] in ("p", "c")):
        graphs = [(0, None, read_graph(text, "dimacs"))]
    else:
        graphs = list(read_graph6_stream(text.splitlines(), strict=True))
    for idx, line, G in graphs:
        row: dict = {}
        if "alpha" in wanted:
            row["alpha"] = independence_number(G)
        if "alpha_tw" in wanted:
            value, T = alpha_tw_exact(G)
            row["alpha_tw"] = value
            if args.certificates:
                row["alpha_tw_decomposition"] = T.to_json()
        if "alpha_td" in wanted:
            value, F = alpha_td_exact(G)
            row["alpha_td"] = value
            if args.certificates:
                row["alpha_td_forest"] = F.to_json()
        if "tw" in wanted:
            value, T = treewidth_exact(G)
            row["tw"] = value
            if args.certificates:
                row["tw_decomposition"] = T.to_json()
        _emit(row, out)
    return 0


def cmd_bramble(args, out: TextIO) -> int:
    G = _graph(args)
    if args.action == "find":
        B = strong_bramble_of_order(G, args.k, minimal_only=args.minimal)
        if B is None:
            _emit({"bramble": None, "k": args.k, "reason": f"no {2 * args.k - 2}-alpha-linked set"}, out)
            return 0
        order, cover = alpha_order_exact(G, B)
        _emit(B.to_json(cover, order), out)
        return 0
    if args.certificate is None:
        raise UsageError(f"bramble {args.action} needs --certificate")
    data = _load_json(args.certificate)
    if args.action == "verify":
        verdict = check_bramble_certificate(G, data)
        _emit({"valid": bool(verdict), **({"reason": verdict.reason} if not verdict else {})}, out)
        return 0 if verdict else 1
    B = StrongBramble.from_json(data)
    verdict = is_strong_bramble(G, B)
    if not verdict:
        _emit({"valid": False, "reason": verdict.reason}, out)
        return 1
    order, cover = alpha_order_exact(G, B)
    _emit({"alpha_order": order, "cover": to_list(cover)}, out)
    return 0


def cmd_dominate(args, out: TextIO) -> int:
    G = _graph(args)
    B = StrongBramble.from_json(_load_json(args.bramble))
    if args.shape == "path":
        _emit({"path": dominating_path(G, B)}, out)
        return 0
    res = dominating_cycle_or_vertex(G, B)
    _emit({"vertex": res} if isinstance(res, int) else {"cycle": res}, out)
    return 0


def cmd_wheel(args, out: TextIO) -> int:
    G = _graph(args)
    if args.action == "detect":
        res = detect_wheel(G, args.d, args.l)
        _emit(res.to_json(), out)
        return 0
    if args.certificate is None:
        raise UsageError("wheel verify needs --certificate")
    data = _load_json(args.certificate)
    M = InducedMinorModel.from_json(data)
    pattern = data.get("pattern") or f"W{args.l}"
    verdict = is_model(G, pattern_from_name(pattern), M)
    _emit({"valid": bool(verdict), "pattern": pattern, **({"reason": verdict.reason} if not verdict else {})}, out)
    return 0 if verdict else 1


def cmd_tdcheck(args, out: TextIO) -> int:
    G = _graph(args)
    T = TreeDecomposition.from_json(_load_json(args.certificate))
    verdict = check_tree_decomposition(G, T)
    row: dict = {"valid": bool(verdict)}
    if verdict:
        row["alpha_width"] = alpha_width(G, T)
    else:
        row["reason"] = verdict.reason
    _emit(row, out)
    return 0 if verdict else 1


def cmd_efcheck(args, out: TextIO) -> int:
    G = _graph(args)
    F = EliminationForest.from_json(_load_json(args.certificate))
    verdict = is_elimination_forest(G, F)
    row: dict = {"valid": bool(verdict)}
    if verdict:
        row["alpha_depth"] = alpha_depth(G, F)
    else:
        row["reason"] = verdict.reason
    _emit(row, out)
    return 0 if verdict else 1


def cmd_suite(args, out: TextIO) -> int:
    params: dict = {}
    if args.k is not None:
        params["k"] = args.k
    if args.d is not None:
        params["d"] = args.d
    if args.l is not None:
        params["l"] = args.l
    if args.patterns:
        params["patterns"] = args.patterns.split(",")
    warn = (lambda msg: print(f"warning: {msg}", file=sys.stderr))
    with _open(args.graph) as fh:
        report = run_suite(args.name, fh, params, workers=args.workers, strict=args.strict, warn=warn, max_n=args.max_n)
    if args.json:
        for o in report.outcomes:
            _emit(o, out)
        _emit({"suite": report.suite, "params": report.params, "counts": report.counts}, out)
    else:
        out.write(report.summary() + "\n")
    return 1 if report.failures else 0


def cmd_convert(args, out: TextIO) -> int:
    G = _graph(args)
    if args.to == "graph6":
        out.write(emit_graph6(G) + "\n")
    elif args.to == "dimacs":
        out.write(emit_dimacs(G))
    else:
        out.write(emit_dot(G))
    return 0


def cmd_enumerate(args, out: TextIO) -> int:
    for G in all_graphs(args.max_n, min_n=args.min_n, connected=args.connected, hereditary="claw-free" if args.claw_free else None):
        out.write(emit_graph6(G) + "\n")
    return 0


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="alphawidth", description="Tree-independence number toolkit.")
    sub = p.add_subparsers(dest="verb", required=True)

    def graph_arg(sp, name="graph"):
        sp.add_argument(name, nargs="?", default="-", help="graph file, '-' for stdin (default)")
        sp.add_argument("--format", choices=["auto", "graph6", "dimacs"], default="auto")

    sp = sub.add_parser("param", help="exact alpha, alpha-tw, alpha-td and tw")
    graph_arg(sp)
    sp.add_argument("--alpha", action="store_true")
    sp.add_argument("--alpha-tw", dest="alpha_tw", action="store_true")
    sp.add_argument("--alpha-td", dest="alpha_td", action="store_true")
    sp.add_argument("--tw", action="store_true")
    sp.add_argument("--certificates", action="store_true", help="include witness decompositions")
    sp.add_argument("--json", action="store_true", help="accepted for uniformity; output is always JSON")
    sp.set_defaults(func=cmd_param)

    sp = sub.add_parser("bramble", help="find a strong bramble, verify a certificate, or compute its alpha-order")
    sp.add_argument("action", choices=["find", "verify", "order"])
    graph_arg(sp)
    sp.add_argument("--k", type=int, default=1)
    sp.add_argument("--minimal", action="store_true", help="keep inclusion-minimal elements only")
    sp.add_argument("--certificate")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_bramble)

    sp = sub.add_parser("dominate", help="dominating path or cycle for a bramble certificate")
    sp.add_argument("shape", choices=["path", "cycle"])
    graph_arg(sp)
    sp.add_argument("--bramble", required=True)
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_dominate)

    sp = sub.add_parser("wheel", help="detect a wheel induced minor or verify a model")
    sp.add_argument("action", choices=["detect", "verify"])
    graph_arg(sp)
    sp.add_argument("--d", type=int, default=3)
    sp.add_argument("--l", type=int, default=4)
    sp.add_argument("--certificate")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_wheel)

    for verb, func, what in (("tdcheck", cmd_tdcheck, "tree-decomposition"), ("efcheck", cmd_efcheck, "elimination forest")):
        sp = sub.add_parser(verb, help=f"validate a {what} certificate")
        graph_arg(sp)
        sp.add_argument("--certificate", required=True)
        sp.add_argument("--json", action="store_true")
        sp.set_defaults(func=func)

    sp = sub.add_parser("suite", help="run a property suite over a graph6 stream")
    sp.add_argument("name", choices=sorted(SUITES))
    sp.add_argument("graph", nargs="?", default="-")
    sp.add_argument("--k", type=int)
    sp.add_argument("--d", type=int)
    sp.add_argument("--l", type=int)
    sp.add_argument("--patterns", help="comma-separated pattern names, e.g. K3,P4")
    sp.add_argument("--max-n", dest="max_n", type=int, help="skip graphs with more vertices")
    sp.add_argument("--workers", type=int, help="worker processes (default from ALPHAWIDTH_WORKERS)")
    sp.add_argument("--strict", action="store_true", help="abort on a malformed line")
    sp.add_argument("--json", action="store_true")
    sp.set_defaults(func=cmd_suite)

    sp = sub.add_parser("convert", help="convert between graph6, DIMACS and DOT")
    graph_arg(sp)
    sp.add_argument("--to", choices=["graph6", "dimacs", "dot"], required=True)
    sp.set_defaults(func=cmd_convert)

    sp = sub.add_parser("enumerate", help="all non-isomorphic graphs as graph6")
    sp.add_argument("max_n", type=int)
    sp.add_argument("--min-n", dest="min_n", type=int, default=1)
    sp.add_argument("--connected", action="store_true")
    sp.add_argument("--claw-free", dest="claw_free", action="store_true")
    sp.set_defaults(func=cmd_enumerate)
    return p


def main(argv: Sequence[str] | None = None, out: TextIO | None = None) -> int:
    out = out or sys.stdout
    parser = build_parser()
    try:
        args, extra = parser.parse_known_args(argv)
        # a graph file given after the options lands in ``extra``
        if len(extra) == 1 and not extra[0].startswith("-") and getattr(args, "graph", None) == "-":
            args.graph = extra[0]
        elif extra:
            parser.error(f"unrecognized arguments: {' '.join(extra)}")
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args, out)
    except (UsageError, GraphFormatError, SizeCapError, PreconditionError, ValueError, KeyError) as exc:
        print(f"alphawidth {args.verb}: {exc}", file=sys.stderr)
        return 2


def main_exit() -> None:
    sys.exit(main())


if __name__ == "__main__":
    main_exit()
