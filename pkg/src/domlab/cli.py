"""Command-line front end.

Exit codes: 0 clean, 1 a violation was found, 2 usage or input error.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Iterator, Sequence

from . import graph6
from .cycles import cycles_of_length, longest_cycle_length, off_cycle_edge
from .enumerate import EnumSpec, enumerate_graphs
from .graph import Graph, vertex_connectivity
from .verify import (LEMMA_CHECKS, VerificationReport, all_graphs, biconnected_graphs,
                     default_threads, lemma_sweep, q_max, sharpness_gallery, theorem1_domain,
                     tightness_search, verify_theorem1)

EXIT_OK, EXIT_VIOLATION, EXIT_USAGE = 0, 1, 2


class UsageError(Exception):
    pass


def _read_graphs(args: argparse.Namespace, errors: list[graph6.Graph6Error]) -> Iterator[graph6.Record]:
    if getattr(args, "graph6_line", None) is not None:
        try:
            yield graph6.Record(1, graph6.parse(args.graph6_line))
        except graph6.Graph6Error as exc:
            raise graph6.Graph6Error(exc.message, 1, args.graph6_line) from None
        return
    if getattr(args, "enum", None) is not None:
        for i, g in enumerate(enumerate_graphs(EnumSpec(args.enum)), 1):
            yield graph6.Record(i, g)
        return
    on_error = getattr(args, "on_error", "raise")
    if args.input == "-":
        yield from graph6.stream(sys.stdin, on_error=on_error, errors=errors)
    else:
        yield from graph6.read_file(args.input, on_error=on_error, errors=errors)


def _yn(flag: bool) -> str:
    return "yes" if flag else "no"


def _analyze_one(g: Graph, limit: int) -> dict:
    length = longest_cycle_length(g)
    cycles = cycles_of_length(g, length, limit=limit) if length else []
    rows = []
    for c in cycles:
        edge = off_cycle_edge(g, c)
        rows.append({"cycle": list(c.verts), "dominating": edge is None,
                     "off_cycle_edge": list(edge) if edge else None})
    return {
        "graph6": graph6.emit(g), "n": g.n, "q": g.size(), "delta": g.min_degree(),
        "kappa": vertex_connectivity(g) if g.n >= 2 else 0, "longest": length,
        "hamiltonian": g.n >= 3 and length == g.n, "longest_cycles": len(cycles),
        "truncated": len(cycles) >= limit, "nondominating": sum(not r["dominating"] for r in rows),
        "cycles": rows,
    }


def cmd_analyze(args: argparse.Namespace) -> int:
    out = []
    for rec in _read_graphs(args, []):
        a = _analyze_one(rec.graph, args.max_cycles)
        out.append(a)
        more = "+" if a["truncated"] else ""
        if a["longest"] == 0:
            cyc = "longest=0 (no cycle)"
        else:
            cyc = (f"longest={a['longest']} hamiltonian={_yn(a['hamiltonian'])} "
                   f"longest_cycles={a['longest_cycles']}{more} nondominating={a['nondominating']}")
        print(f"{a['graph6']}: n={a['n']} q={a['q']} delta={a['delta']} kappa={a['kappa']} {cyc}")
        if args.verbose:
            for r in a["cycles"]:
                status = "dominating" if r["dominating"] else f"misses edge {r['off_cycle_edge']}"
                print(f"  cycle {' '.join(map(str, r['cycle']))}: {status}")
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            for a in out:
                fh.write(json.dumps(a, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_enum(args: argparse.Namespace) -> int:
    spec = EnumSpec(args.n, args.min_deg, args.max_edges, args.biconnected)
    graphs = enumerate_graphs(spec)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            graph6.write(graphs, fh)
    else:
        graph6.write(graphs, sys.stdout)
    print(f"{len(graphs)} graphs", file=sys.stderr)
    return EXIT_OK


def _print_report(rep: VerificationReport, title: str) -> None:
    print(f"{title}: scanned {rep.graphs_scanned} graphs, {rep.applicable} applicable, "
          f"{len(rep.violations)} violations, {len(rep.errors)} errors "
          f"({rep.wall_time:.2f}s)")
    for name, row in rep.checks.items():
        print(f"  {name}: {row['applicable']} applicable, {row['holds']} hold, "
              f"{row['violations']} violations")
    for row in rep.violations[:20]:
        print("  violation " + json.dumps(row, sort_keys=True))
    for row in rep.errors[:20]:
        print("  error " + json.dumps(row, sort_keys=True))


def _attach_parse_errors(rep: VerificationReport, errors: list[graph6.Graph6Error]) -> None:
    for e in errors:
        rep.errors.append({"graph6": e.line or "", "line": e.lineno, "error": e.message})
    rep.finalize()


def cmd_verify(args: argparse.Namespace) -> int:
    if args.delta < 2:
        raise UsageError("--delta must be at least 2")
    errors: list[graph6.Graph6Error] = []
    if args.input:
        floor, cap = args.delta, q_max(args.delta)
        source = (r.graph for r in _read_graphs(args, errors)
                  if r.graph.min_degree() >= floor and r.graph.size() <= cap
                  and (args.n_max is None or r.graph.n <= args.n_max))
        spec = {"delta": args.delta, "q_max": cap, "n_max": args.n_max, "domain": args.input}
        rep = verify_theorem1(source, threads=args.threads, spec=spec)
    else:
        try:
            source = theorem1_domain(args.delta, args.n_max)
            spec = {"delta": args.delta, "q_max": q_max(args.delta), "n_max": args.n_max,
                    "domain": "enumerated"}
            rep = verify_theorem1(source, threads=args.threads, spec=spec)
        except ValueError as exc:
            raise UsageError(str(exc)) from None
    _attach_parse_errors(rep, errors)
    _print_report(rep, f"theorem sweep delta={args.delta}")
    if args.json:
        rep.write(args.json)
    return EXIT_VIOLATION if rep.violations else EXIT_OK


def cmd_lemmas(args: argparse.Namespace) -> int:
    which = tuple(args.which)
    errors: list[graph6.Graph6Error] = []
    if args.input:
        source = (r.graph for r in _read_graphs(args, errors))
        spec = {"domain": args.input}
    else:
        if args.n_max is None:
            raise UsageError("lemmas needs --n-max or --input")
        if args.n_max > 12:
            raise UsageError("--n-max above 12 is outside exhaustive enumeration")
        if set(which) <= {"4", "D"}:
            source = biconnected_graphs(args.n_max)
            spec = {"domain": "2-connected", "n_max": args.n_max}
        else:
            source = all_graphs(args.n_max)
            spec = {"domain": "all", "n_max": args.n_max}
    rep = lemma_sweep(source, which, threads=args.threads, spec=spec)
    _attach_parse_errors(rep, errors)
    _print_report(rep, f"checks {','.join(which)}")
    print(f"{len(rep.violations)} violations")
    if args.json:
        rep.write(args.json)
    return EXIT_VIOLATION if rep.violations else EXIT_OK


def cmd_gallery(args: argparse.Namespace) -> int:
    entries = sharpness_gallery(args.delta)
    rows = []
    for e in entries:
        a = e.analysis
        status = ("non-dominating longest cycle present" if a["nondominating_longest_cycle"]
                  else "every longest cycle dominating")
        line = (f"{e.name}: q={a['q']} {status} (n={a['n']} delta={a['delta']} kappa={a['kappa']} "
                f"longest={a['longest']} hamiltonian={_yn(a['hamiltonian'])}) "
                f"role={e.role} claim={'confirmed' if a['claim_holds'] else 'NOT confirmed'}")
        if "discrepancy" in a:
            line += f" [{a['discrepancy']}]"
        print(line)
        rows.append({"name": e.name, "role": e.role, "graph6": graph6.emit(e.graph), **a})
    if args.json:
        with open(args.json, "w", encoding="utf-8") as fh:
            for r in rows:
                fh.write(json.dumps(r, sort_keys=True) + "\n")
    return EXIT_OK


def cmd_tightness(args: argparse.Namespace) -> int:
    q_to = args.q if args.q_to is None else args.q_to
    try:
        rep = tightness_search(args.delta, args.q, q_to, args.n_max, threads=args.threads)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    print(f"tightness delta={args.delta} q in [{args.q}, {q_to}] n<={rep.spec['n_max']}: "
          f"{rep.graphs_scanned} graphs, {len(rep.violations)} with a non-dominating longest cycle")
    for row in rep.violations:
        print(f"  witness {row['graph6']} n={row['n']} q={row['q']} kappa={row['kappa']} "
              f"longest={row['longest']} cycle={row['cycle']} misses={row['off_cycle_edge']}")
    if args.json:
        rep.write(args.json)
    if args.out:
        with open(args.out, "w", encoding="ascii") as fh:
            for row in rep.violations:
                fh.write(row["graph6"] + "\n")
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="domlab", description="Dominating longest cycle verification lab")
    sub = p.add_subparsers(dest="command", required=True)

    a = sub.add_parser("analyze", help="report cycle facts for graph6 input")
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--graph6-line", metavar="S")
    src.add_argument("--input", metavar="FILE", help="graph6 file, '-' for stdin")
    src.add_argument("--enum", type=int, metavar="N", help="every graph on N vertices")
    a.add_argument("--max-cycles", type=int, default=10000)
    a.add_argument("--json", metavar="PATH")
    a.add_argument("-v", "--verbose", action="store_true", help="list every longest cycle")
    a.set_defaults(func=cmd_analyze)

    e = sub.add_parser("enum", help="write all graphs of an order as graph6")
    e.add_argument("--n", type=int, required=True)
    e.add_argument("--min-deg", type=int, default=0)
    e.add_argument("--max-edges", type=int)
    e.add_argument("--biconnected", action="store_true")
    e.add_argument("--out", metavar="FILE")
    e.set_defaults(func=cmd_enum)

    def sweep_flags(sp: argparse.ArgumentParser) -> None:
        sp.add_argument("--json", metavar="PATH", help="write newline-delimited JSON report")
        sp.add_argument("--threads", type=int, default=default_threads())

    v = sub.add_parser("verify", help="exhaustive or streamed dominating-cycle sweep")
    v.add_argument("--delta", type=int, required=True)
    v.add_argument("--n-max", type=int)
    v.add_argument("--input", metavar="FILE")
    v.add_argument("--on-error", choices=("raise", "skip"), default="raise")
    sweep_flags(v)
    v.set_defaults(func=cmd_verify)

    lm = sub.add_parser("lemmas", help="lemma and classical-theorem sweeps")
    lm.add_argument("--which", action="append", choices=LEMMA_CHECKS, required=True)
    lm.add_argument("--n-max", type=int)
    lm.add_argument("--input", metavar="FILE")
    lm.add_argument("--on-error", choices=("raise", "skip"), default="raise")
    sweep_flags(lm)
    lm.set_defaults(func=cmd_lemmas)

    gl = sub.add_parser("gallery", help="analyse the sharpness constructions")
    gl.add_argument("--delta", type=int, required=True)
    gl.add_argument("--json", metavar="PATH")
    gl.set_defaults(func=cmd_gallery)

    t = sub.add_parser("tightness", help="search for non-dominating longest cycles by size")
    t.add_argument("--delta", type=int, required=True)
    t.add_argument("--q", type=int, required=True)
    t.add_argument("--q-to", type=int)
    t.add_argument("--n-max", type=int)
    t.add_argument("--out", metavar="FILE", help="write witnesses as graph6")
    sweep_flags(t)
    t.set_defaults(func=cmd_tightness)
    return p


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_OK if exc.code in (0, None) else EXIT_USAGE
    try:
        return args.func(args)
    except graph6.Graph6Error as exc:
        print(f"domlab: graph6 error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (UsageError, OSError) as exc:
        print(f"domlab: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"domlab: {exc}", file=sys.stderr)
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())
