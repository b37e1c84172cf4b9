"""Command-line entry point: ``planecount {analyze,color,verify-theorems,bounds}``.

Records go to stdout as JSON lines; human-readable summaries go to stderr.
Exit codes: 0 success, 1 violation (or inconclusive verification), 2 input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import asdict
from fractions import Fraction
from typing import Iterator

from . import bounds, coloring, corpus, structure
from .graph import Graph
from .plane import (
    NotConnected,
    NotGenusZero,
    PlaneGraph,
    RotationSystem,
    build_plane_graph,
)

EXIT_OK, EXIT_VIOLATION, EXIT_INPUT = 0, 1, 2
SCAN_RANGE = (4, 11)
# exact criticality checks on larger infeasible graphs get expensive
CRITICALITY_MAX_N = 20


class InputError(Exception):
    pass


def rational(q) -> str:
    return bounds.format_rational(q)


def _emit(record: dict, out=None) -> None:
    out = out or sys.stdout
    out.write(json.dumps(record, sort_keys=False) + "\n")


def _read_input(path: str) -> bytes:
    if path == "-":
        return sys.stdin.buffer.read()
    try:
        with open(path, "rb") as fh:
            return fh.read()
    except OSError as exc:
        raise InputError(str(exc)) from exc


def _detect_format(data: bytes, fmt: str) -> str:
    if fmt != "auto":
        return fmt
    return "planar_code" if data.startswith(b">>planar_code") else "graph6"


def load_records(path: str, fmt: str = "auto") -> tuple[str, list]:
    """Parse the whole input up front so malformed files fail before any output."""
    data = _read_input(path)
    fmt = _detect_format(data, fmt)
    try:
        if fmt == "graph6":
            text = data.decode("ascii")
            return fmt, list(corpus.read_graph6(text.splitlines()))
        return fmt, list(corpus.parse_planar_code(data))
    except (UnicodeDecodeError, corpus.MalformedGraph6, corpus.MalformedPlanarCode) as exc:
        raise InputError(str(exc)) from exc


def _components(item) -> Iterator[tuple[str, Graph, RotationSystem | None]]:
    """Split an input record into connected pieces (with rotation when known)."""
    if isinstance(item, RotationSystem):
        pieces = corpus.split_components(item)
        for j, (_, rot) in enumerate(pieces):
            yield ("" if len(pieces) == 1 else f":{j}"), rot.graph, rot
    else:
        comps = item.components() if item.n else []
        for j, comp in enumerate(comps):
            yield ("" if len(comps) == 1 else f":{j}"), item.induced(comp), None


# --------------------------------------------------------------------------
# analyze
# --------------------------------------------------------------------------

def coloring_outcome(g: Graph, k: int = 3, budget: int | None = None) -> tuple[str, coloring.Coloring | None]:
    """Peel first, then fall back to exact search."""
    trace = coloring.peel_order(g)
    if trace.complete:
        c = coloring.greedy_color_from_peel(g, trace, k) if k >= 3 else None
        if c is not None:
            return "peeled", c
    try:
        c = coloring.exact_k_color(g, k, budget)
    except coloring.SearchBudgetExceeded:
        return "budget", None
    return ("exact", c) if c is not None else ("infeasible", None)


def bound_checks(pg: PlaneGraph, verdict: bounds.Theorem4Verdict, outcome: str, budget=None) -> list[dict]:
    c = verdict.counts
    checks = [
        {"name": "euler", "holds": c.n - c.e + c.f == 2, "slack": rational(0)},
        {"name": "face_length_sum", "holds": sum(pg.faces.lengths) == 2 * c.e, "slack": rational(0)},
        {"name": "theorem4_triangle_faces", "holds": verdict.conclusion_holds, "slack": rational(verdict.slack)},
    ]
    tri = set(pg.triangular_faces())
    other = [L for i, L in enumerate(pg.faces.lengths) if i not in tri]
    if other and c.n >= 3:
        m = min(other)
        raw = bounds.raw_face_bound(m, c.e, c.f3)
        checks.append({"name": f"face_count_raw_m{m}", "holds": c.f <= raw, "slack": rational(raw - c.f)})
        if m >= bounds.MIN_M and verdict.hypotheses_hold:
            _, closed = bounds.face_count_bound(m, c.e, c.f3)
            checks.append({"name": f"face_count_closed_m{m}", "holds": c.f < closed, "slack": rational(closed - c.f)})
    if outcome == "infeasible" and 4 <= c.n <= CRITICALITY_MAX_N:
        try:
            cert = coloring.is_4_critical(pg.graph, budget)
        except coloring.SearchBudgetExceeded:
            cert = None
        if cert:
            ky = bounds.ky_lower_bound(c.n)
            checks.append({"name": "ky_lower_bound", "holds": c.e >= ky, "slack": rational(c.e - ky)})
    return checks


def verdict_record(graph_id: str, pg: PlaneGraph, budget: int | None = None) -> dict:
    g = pg.graph
    verdict = bounds.theorem4_verdict(pg)
    report = structure.forbidden_cycle_scan(g, *SCAN_RANGE) if g.n >= 3 else None
    outcome, _ = coloring_outcome(g, 3, budget)
    return {
        "graph_id": graph_id,
        "graph6": corpus.write_graph6(g),
        "rotation": [list(nb) for nb in pg.rotation.order],
        "counts": asdict(verdict.counts),
        "structure": {
            "min_degree": min(g.degrees(), default=0),
            "connected": g.is_connected(),
            "has_adjacent_triangles": structure.adjacent_triangles_exist(g),
            "triangle_count": structure.count_triangles(g),
            "forbidden_cycle_range": list(SCAN_RANGE),
            "forbidden_cycle_lengths": report.forbidden_lengths if report else [],
        },
        "theorem4": {
            "hypotheses_hold": verdict.hypotheses_hold,
            "failed_hypotheses": list(verdict.failed_hypotheses),
            "conclusion_holds": verdict.conclusion_holds,
            "slack": rational(verdict.slack),
        },
        "coloring_outcome": outcome,
        "bounds_checked": bound_checks(pg, verdict, outcome, budget),
    }


def cmd_analyze(args) -> int:
    fmt, items = load_records(args.input, args.format)
    embedding = args.embedding or ("given" if fmt == "planar_code" else "all")
    if embedding == "given" and fmt != "planar_code":
        raise InputError("graph6 carries no embedding; use --embedding all")
    violations = 0
    for idx, item in enumerate(items):
        for suffix, g, rot in _components(item):
            gid = f"{idx}{suffix}"
            if embedding == "given":
                try:
                    pgs = [(gid, build_plane_graph(rot))]
                except (NotGenusZero, NotConnected) as exc:
                    _emit({"graph_id": gid, "error": str(exc), "graph6": corpus.write_graph6(g),
                           "rotation": [list(nb) for nb in rot.order]})
                    continue
            else:
                try:
                    rots = list(corpus.enumerate_embeddings(g, budget=args.budget or 10**7))
                except corpus.BudgetExceeded as exc:
                    _emit({"graph_id": gid, "error": str(exc), "graph6": corpus.write_graph6(g)})
                    continue
                if not rots:
                    _emit({"graph_id": gid, "error": "no genus-0 embedding (not planar)",
                           "graph6": corpus.write_graph6(g)})
                    continue
                pgs = [(f"{gid}#e{j}", build_plane_graph(r)) for j, r in enumerate(rots)]
            for pid, pg in pgs:
                rec = verdict_record(pid, pg, args.budget)
                t4 = rec["theorem4"]
                if t4["hypotheses_hold"] and not t4["conclusion_holds"]:
                    violations += 1
                    rec["violation"] = "theorem4"
                _emit(rec)
    if violations:
        print(f"violations: {violations}", file=sys.stderr)
        return EXIT_VIOLATION
    return EXIT_OK


# --------------------------------------------------------------------------
# color
# --------------------------------------------------------------------------

def color_record(graph_id: str, g: Graph, k: int, strategy: str, budget: int | None) -> dict:
    c = None
    if strategy == "peel":
        trace = coloring.peel_order(g)
        if trace.complete and k >= 3:
            outcome, c = "peeled", coloring.greedy_color_from_peel(g, trace, k)
        else:
            outcome = "stuck"
    elif strategy == "exact":
        try:
            c = coloring.exact_k_color(g, k, budget)
            outcome = "exact" if c is not None else "infeasible"
        except coloring.SearchBudgetExceeded:
            outcome = "budget"
    else:
        outcome, c = coloring_outcome(g, k, budget)
    if c is not None and not coloring.verify_coloring(g, c):
        raise AssertionError(f"improper coloring produced for {graph_id}")
    return {
        "graph_id": graph_id,
        "graph6": corpus.write_graph6(g),
        "k": k,
        "strategy": strategy,
        "outcome": outcome,
        "coloring": list(c.assignment) if c is not None else None,
        "colors_used": c.colors_used if c is not None else None,
    }


def cmd_color(args) -> int:
    _, items = load_records(args.input, args.format)
    for idx, item in enumerate(items):
        g = item.graph if isinstance(item, RotationSystem) else item
        _emit(color_record(str(idx), g, args.k, args.strategy, args.budget))
    return EXIT_OK


# --------------------------------------------------------------------------
# verify-theorems
# --------------------------------------------------------------------------

def _repro(g: Graph, rot: RotationSystem | None = None) -> dict:
    out = {"graph6": corpus.write_graph6(g)}
    if rot is not None:
        out["rotation"] = [list(nb) for nb in rot.order]
    return out


def verify_theorem4(max_n: int, emit=_emit) -> dict:
    graphs = instances = hyp = violations = 0
    for g in corpus.enumerate_small_graphs(corpus.CorpusFilter(max_n=max_n)):
        graphs += 1
        for rot in corpus.enumerate_embeddings(g):
            instances += 1
            v = bounds.theorem4_verdict(build_plane_graph(rot))
            if v.hypotheses_hold:
                hyp += 1
                if not v.conclusion_holds:
                    violations += 1
                    emit({"violation": "theorem4", **_repro(g, rot), "counts": asdict(v.counts)})
    return {"theorem": 4, "max_n": max_n, "graphs": graphs, "instances": instances,
            "hypothesis_instances": hyp, "violations": violations, "budget_exhausted": 0}


def verify_theorem2(max_n: int, emit=_emit) -> dict:
    flt = corpus.CorpusFilter(max_n=max_n, forbid_cycles=(4, 11), require_planar=True)
    graphs = violations = 0
    for g in corpus.enumerate_small_graphs(flt):
        graphs += 1
        trace = coloring.peel_order(g)
        ok = trace.complete and coloring.verify_coloring(g, coloring.greedy_color_from_peel(g, trace))
        if not ok:
            violations += 1
            emit({"violation": "theorem2", **_repro(g), "stuck_at": list(trace.remaining)})
    return {"theorem": 2, "max_n": max_n, "graphs": graphs, "instances": graphs,
            "hypothesis_instances": graphs, "violations": violations, "budget_exhausted": 0}


def verify_theorem6(max_n: int, budget: int | None = None, emit=_emit) -> dict:
    flt = corpus.CorpusFilter(max_n=max_n, forbid_cycles=(4, 8), require_planar=True)
    graphs = violations = exhausted = 0
    for g in corpus.enumerate_small_graphs(flt):
        graphs += 1
        try:
            c = coloring.exact_k_color(g, 3, budget)
        except coloring.SearchBudgetExceeded:
            exhausted += 1
            emit({"budget_exhausted": "theorem6", **_repro(g)})
            continue
        if c is None or not coloring.verify_coloring(g, c):
            violations += 1
            emit({"violation": "theorem6", **_repro(g)})
    return {"theorem": 6, "max_n": max_n, "graphs": graphs, "instances": graphs,
            "hypothesis_instances": graphs, "violations": violations, "budget_exhausted": exhausted}


def cmd_verify_theorems(args) -> int:
    if args.max_n > corpus.GENERATION_CAP:
        raise InputError(f"--max-n {args.max_n} exceeds generation cap {corpus.GENERATION_CAP}")
    if args.theorem == 4:
        summary = verify_theorem4(args.max_n)
    elif args.theorem == 2:
        summary = verify_theorem2(args.max_n)
    else:
        summary = verify_theorem6(args.max_n, args.budget)
    _emit({"summary": summary})
    print(
        f"theorem {summary['theorem']} (n <= {summary['max_n']}): "
        f"graphs: {summary['graphs']}, instances: {summary['instances']}, "
        f"hypothesis instances: {summary['hypothesis_instances']}, "
        f"budget exhausted: {summary['budget_exhausted']}, violations: {summary['violations']}",
        file=sys.stderr,
    )
    return EXIT_VIOLATION if summary["violations"] or summary["budget_exhausted"] else EXIT_OK


# --------------------------------------------------------------------------
# bounds
# --------------------------------------------------------------------------

def bounds_table(m: int, n: int) -> dict:
    chain = bounds.bound_chain(m)
    rep = bounds.contradiction_report(m)
    return {
        "m": m,
        "n": n,
        "face_coefficient": chain.face_coefficient,
        "edge_upper_bound": bounds.edge_upper_bound(m, n),
        "ky_lower_bound": bounds.ky_lower_bound(n) if n >= 4 else None,
        "always_contradicts": rep.always_contradicts,
        "threshold_n": rep.threshold_n,
        "contradicts_up_to": rep.contradicts_up_to,
    }


def cmd_bounds(args) -> int:
    try:
        table = bounds_table(args.m, args.n)
    except (bounds.InvalidM, bounds.InvalidN) as exc:
        raise InputError(str(exc)) from exc
    if args.json:
        _emit({k: rational(v) if isinstance(v, Fraction) else v for k, v in table.items()})
        return EXIT_OK
    if table["always_contradicts"]:
        verdict = "always"
    elif table["threshold_n"] is not None:
        verdict = f"for n >= {table['threshold_n']}"
    elif table["contradicts_up_to"] is not None:
        verdict = f"only for n <= {table['contradicts_up_to']} (fails for large n)"
    else:
        verdict = "never"
    ky = table["ky_lower_bound"]
    print(f"m = {args.m}, n = {args.n}")
    print(f"face coefficient 6/(m+6):        {table['face_coefficient']}")
    print(f"edge upper bound (m+6)(n-2)/m:   {table['edge_upper_bound']}")
    print(f"4-critical bound (5n-2)/3:       {ky if ky is not None else 'n/a (n < 4)'}")
    print(f"contradiction:                   {verdict}")
    return EXIT_OK


# --------------------------------------------------------------------------

def _budget(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError("budget must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="planecount", description=__doc__.splitlines()[0])
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="counts, hypothesis scan and verdicts per graph/embedding")
    a.add_argument("input", help="input file, or - for stdin")
    a.add_argument("--format", choices=["auto", "graph6", "planar_code"], default="auto")
    a.add_argument("--embedding", choices=["all", "given"], default=None,
                   help="default: given for planar_code, all for graph6")
    a.add_argument("--budget", type=_budget, default=None)
    a.set_defaults(func=cmd_analyze)

    c = sub.add_parser("color", help="3-color (or k-color) each input graph")
    c.add_argument("input")
    c.add_argument("--format", choices=["auto", "graph6", "planar_code"], default="auto")
    c.add_argument("--k", type=int, default=3)
    c.add_argument("--strategy", choices=["peel", "exact", "auto"], default="auto")
    c.add_argument("--budget", type=_budget, default=None)
    c.set_defaults(func=cmd_color)

    v = sub.add_parser("verify-theorems", help="exhaustive verification over generated graphs")
    v.add_argument("--theorem", type=int, choices=[2, 4, 6], required=True)
    v.add_argument("--max-n", type=int, required=True)
    v.add_argument("--budget", type=_budget, default=None)
    v.set_defaults(func=cmd_verify_theorems)

    b = sub.add_parser("bounds", help="print the exact bound table for given m and n")
    b.add_argument("--m", type=int, required=True)
    b.add_argument("--n", type=int, required=True)
    b.add_argument("--json", action="store_true")
    b.set_defaults(func=cmd_bounds)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "k", 3) < 1:
        print("error: --k must be positive", file=sys.stderr)
        return EXIT_INPUT
    try:
        return args.func(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
