"""Theorem sweeps, lemma sweeps, the sharpness gallery and tightness search.

Every sweep produces a :class:`VerificationReport`. Per-graph work is a pure
function of the graph's graph6 line, so sweeps can be split into chunks and
run in worker processes; partial reports merge associatively and are sorted
before emission, which makes serial and parallel runs byte-identical.
"""

from __future__ import annotations

import json
import os
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import islice
from typing import Any, Callable, Iterable, Iterator, Sequence

from . import graph6
from .canon import MAX_CANON_ORDER, canonical_form
from .cycles import (Cycle, cycles_of_length, has_cycle_at_least, longest_cycle_length,
                     nondominating_longest_cycle, off_cycle_edge, theorem_e_bound)
from .enumerate import EnumSpec, MAX_ENUM_ORDER, iter_unordered
from .graph import (Graph, complete, copies, empty, is_biconnected, join, vertex_connectivity,
                    witness8)
from .segments import (check_lemma1, check_lemma2, check_lemma3, check_lemma4, cut_sets,
                       extremal_segment_lengths_ok, lemma4_threshold, longest_triples)

LEMMA_CHECKS = ("1", "2", "3", "4", "D", "E")


def q_max(delta: int) -> int:
    """Largest size q admitted by the dominating-cycle size bound at min degree delta."""
    if delta < 2:
        raise ValueError(f"size bound defined for delta >= 2, got {delta}")
    if delta == 2:
        return 8
    return (3 * (delta - 1) * (delta + 2) - 1) // 2


def relaxed_bound(delta: int) -> int:
    """The next-larger bound that a sharpness example must defeat (9 or 3(d-1)(d+2)/2)."""
    return lemma4_threshold(delta)


# -- reports ----------------------------------------------------------------


@dataclass
class VerificationReport:
    kind: str
    spec: dict[str, Any]
    graphs_scanned: int = 0
    applicable: int = 0
    violations: list[dict[str, Any]] = field(default_factory=list)
    errors: list[dict[str, Any]] = field(default_factory=list)
    checks: dict[str, dict[str, int]] = field(default_factory=dict)
    wall_time: float = 0.0

    @property
    def confirmed(self) -> bool:
        return not self.violations and not self.errors

    def tally(self, check: str, applicable: bool, holds: bool | None) -> None:
        row = self.checks.setdefault(check, {"instances": 0, "applicable": 0, "holds": 0, "violations": 0})
        row["instances"] += 1
        if applicable:
            row["applicable"] += 1
            if holds:
                row["holds"] += 1
            else:
                row["violations"] += 1

    def merge(self, other: "VerificationReport") -> "VerificationReport":
        self.graphs_scanned += other.graphs_scanned
        self.applicable += other.applicable
        self.violations.extend(other.violations)
        self.errors.extend(other.errors)
        for name, row in other.checks.items():
            mine = self.checks.setdefault(name, {k: 0 for k in row})
            for k, v in row.items():
                mine[k] = mine.get(k, 0) + v
        return self

    def finalize(self) -> "VerificationReport":
        key = lambda r: (r.get("graph6", ""), json.dumps(r, sort_keys=True))
        self.violations.sort(key=key)
        self.errors.sort(key=key)
        self.checks = dict(sorted(self.checks.items()))
        return self

    def summary(self) -> dict[str, Any]:
        return {"type": "summary", "kind": self.kind, "spec": self.spec,
                "graphs_scanned": self.graphs_scanned, "applicable": self.applicable,
                "violations": len(self.violations), "errors": len(self.errors),
                "checks": self.checks, "confirmed": self.confirmed,
                "wall_time": round(self.wall_time, 3)}

    def to_dict(self) -> dict[str, Any]:
        d = {k: v for k, v in self.summary().items() if k != "type"}
        d["violations"] = self.violations
        d["errors"] = self.errors
        return d

    @classmethod
    def from_dict(cls, d: dict[str, Any]) -> "VerificationReport":
        return cls(d["kind"], d["spec"], d["graphs_scanned"], d["applicable"],
                   list(d["violations"]), list(d["errors"]), dict(d["checks"]), d["wall_time"])

    def lines(self, include_timing: bool = True) -> Iterator[str]:
        """Newline-delimited JSON: the summary object, then one row per finding."""
        summary = self.summary()
        if not include_timing:
            summary.pop("wall_time")
        yield json.dumps(summary, sort_keys=True)
        for row in self.violations:
            yield json.dumps({"type": "violation", **row}, sort_keys=True)
        for row in self.errors:
            yield json.dumps({"type": "error", **row}, sort_keys=True)

    def write(self, path: str) -> None:
        with open(path, "w", encoding="utf-8") as fh:
            for line in self.lines():
                fh.write(line + "\n")


def canonical_copy(g: Graph) -> Graph:
    return g.relabel(canonical_form(g).labeling) if g.n <= MAX_CANON_ORDER else g


# -- per-graph work -----------------------------------------------------------


def theorem1_applicable(g: Graph) -> bool:
    delta = g.min_degree()
    return g.n >= 3 and delta >= 2 and g.size() <= q_max(delta) and is_biconnected(g)


def theorem1_violation(g: Graph) -> dict[str, Any] | None:
    """Row describing a longest cycle of ``g`` that misses an edge, or None.

    Every longest cycle is inspected. The row is built on the canonical
    relabeling of ``g`` so its cycle and edge refer to the emitted graph6.
    """
    length = longest_cycle_length(g)
    if length >= g.n - 1:
        return None
    if not any(off_cycle_edge(g, c) for c in cycles_of_length(g, length)):
        return None
    h = canonical_copy(g)
    bad = [(c, e) for c in cycles_of_length(h, length) if (e := off_cycle_edge(h, c))]
    c, edge = bad[0]
    return {"graph6": graph6.emit(h), "n": h.n, "q": h.size(), "delta": h.min_degree(),
            "kappa": vertex_connectivity(h), "longest": length, "cycle": list(c.verts),
            "off_cycle_edge": list(edge), "nondominating_cycles": len(bad)}


def revalidate_violation(row: dict[str, Any], require_applicable: bool = True) -> bool:
    """Re-derive a non-dominating longest cycle from its graph6 string alone.

    Tightness witnesses lie above the size bound; pass ``require_applicable=False``.
    """
    g = graph6.parse(row["graph6"])
    c = Cycle.of(g, row["cycle"])
    u, v = row["off_cycle_edge"]
    if require_applicable and not theorem1_applicable(g):
        return False
    return (longest_cycle_length(g) == c.length == row["longest"]
            and g.has_edge(u, v) and not (c.mask >> u & 1) and not (c.mask >> v & 1))


def _theorem1_unit(line: str, rep: VerificationReport) -> None:
    g = graph6.parse(line)
    rep.graphs_scanned += 1
    if not theorem1_applicable(g):
        return
    rep.applicable += 1
    row = theorem1_violation(g)
    rep.tally("theorem1", True, row is None)
    if row is not None:
        rep.violations.append(row)


def _tightness_unit(line: str, rep: VerificationReport) -> None:
    g = graph6.parse(line)
    rep.graphs_scanned += 1
    rep.applicable += 1
    row = theorem1_violation(g)
    rep.tally("dominating", True, row is None)
    if row is not None:
        rep.violations.append(row)


def _lemma_row(g: Graph, verdict) -> dict[str, Any]:
    return {"graph6": graph6.emit(g), "n": g.n, "q": g.size(), **verdict.as_dict()}


def _lemma_unit(line: str, rep: VerificationReport, which: Sequence[str]) -> None:
    g = graph6.parse(line)
    rep.graphs_scanned += 1
    touched = False

    def record(name: str, verdict) -> None:
        nonlocal touched
        rep.tally(name, verdict.applicable, verdict.holds)
        if verdict.applicable:
            touched = True
            if not verdict.holds:
                rep.violations.append(_lemma_row(g, verdict))

    if {"1", "2", "E"} & set(which):
        delta = g.min_degree()
        for c, paths in longest_triples(g):
            if "E" in which:
                pbar = paths[0].length
                ok = theorem_e_bound(c.length, pbar, delta)
                rep.tally("E", True, ok)
                touched = True
                if not ok:
                    rep.violations.append({"graph6": graph6.emit(g), "n": g.n, "q": g.size(),
                                           "lemma": "E", "cycle": list(c.verts), "pbar": pbar})
            for p in paths:
                if "1" in which:
                    record("1", check_lemma1(g, c, p))
                if "2" in which:
                    for v in check_lemma2(g, c, p):
                        record("2", v)
                ext = extremal_segment_lengths_ok(g, c, p)
                if ext is not None:
                    rep.tally("segments>=2", True, ext)
                    if not ext:
                        rep.violations.append({"graph6": graph6.emit(g), "lemma": "segments>=2",
                                               "cycle": list(c.verts), "path": list(p.verts)})
    if "3" in which:
        for s_set in cut_sets(g):
            for v in check_lemma3(g, s_set):
                record("3", v)
    if "4" in which and is_biconnected(g):
        record("4", check_lemma4(g))
    if "D" in which:
        hyp = is_biconnected(g)
        ok = hyp and has_cycle_at_least(g, min(g.n, 2 * g.min_degree()))
        rep.tally("D", hyp, ok)
        if hyp:
            touched = True
            if not ok:
                rep.violations.append({"graph6": graph6.emit(g), "n": g.n, "lemma": "D"})
    if touched:
        rep.applicable += 1


_UNITS: dict[str, Callable[..., None]] = {
    "theorem1": _theorem1_unit,
    "tightness": _tightness_unit,
    "lemmas": _lemma_unit,
}


def _run_chunk(kind: str, spec: dict[str, Any], lines: list[str], extra: tuple) -> VerificationReport:
    rep = VerificationReport(kind, spec)
    unit = _UNITS[kind]
    for line in lines:
        try:
            unit(line, rep, *extra)
        except Exception as exc:  # a single bad graph becomes a report row
            rep.errors.append({"graph6": line, "error": f"{type(exc).__name__}: {exc}"})
    return rep


def _as_lines(source: Iterable[Graph | str | graph6.Record]) -> Iterator[str]:
    for item in source:
        if isinstance(item, str):
            yield item
        elif isinstance(item, graph6.Record):
            yield graph6.emit(item.graph)
        else:
            yield graph6.emit(item)


def default_threads() -> int:
    return os.cpu_count() or 1


def _sweep(kind: str, spec: dict[str, Any], source: Iterable, extra: tuple = (),
           threads: int = 1, chunk: int = 2000) -> VerificationReport:
    start = time.perf_counter()
    report = VerificationReport(kind, spec)
    lines = _as_lines(source)
    if threads <= 1:
        while batch := list(islice(lines, chunk)):
            report.merge(_run_chunk(kind, spec, batch, extra))
    else:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            futures = []
            while batch := list(islice(lines, chunk)):
                futures.append(pool.submit(_run_chunk, kind, spec, batch, extra))
            for fut in futures:
                report.merge(fut.result())
    report.wall_time = time.perf_counter() - start
    return report.finalize()


# -- domains ------------------------------------------------------------------


def theorem1_domain(delta: int, n_max: int | None = None) -> Iterator[Graph]:
    """All 2-connected graphs with min degree >= delta and q <= q_max(delta).

    The handshake bound n <= 2 q_max(delta) / delta makes the domain finite.
    """
    qm = q_max(delta)
    top = 2 * qm // delta
    if n_max is not None:
        top = min(top, n_max)
    if top > MAX_ENUM_ORDER:
        raise ValueError(f"domain reaches n={top}; exhaustive enumeration stops at "
                         f"n={MAX_ENUM_ORDER}, pass n_max or stream graphs from a file")

    def domain() -> Iterator[Graph]:
        for n in range(max(3, delta + 1), top + 1):
            spec = EnumSpec(n, delta, min(qm, n * (n - 1) // 2), True)
            yield from (g for _, g in iter_unordered(spec))

    return domain()


def all_graphs(n_max: int, n_min: int = 1) -> Iterator[Graph]:
    for n in range(n_min, n_max + 1):
        yield from (g for _, g in iter_unordered(EnumSpec(n)))


def biconnected_graphs(n_max: int, n_min: int = 3) -> Iterator[Graph]:
    for n in range(max(3, n_min), n_max + 1):
        yield from (g for _, g in iter_unordered(EnumSpec(n, 2, None, True)))


# -- public sweeps ------------------------------------------------------------


def verify_theorem1(source: Iterable[Graph | str | graph6.Record], threads: int = 1,
                    spec: dict[str, Any] | None = None, chunk: int = 2000) -> VerificationReport:
    """Check that every longest cycle dominates on each applicable graph of ``source``.

    Applicable: 2-connected, delta >= 2 and q <= q_max(delta). Others are
    counted in ``graphs_scanned`` only.
    """
    return _sweep("theorem1", spec or {}, source, threads=threads, chunk=chunk)


def verify_theorem1_exhaustive(delta: int, n_max: int | None = None, threads: int = 1) -> VerificationReport:
    spec = {"delta": delta, "q_max": q_max(delta), "n_max": n_max, "domain": "enumerated"}
    return verify_theorem1(theorem1_domain(delta, n_max), threads=threads, spec=spec)


def lemma_sweep(source: Iterable[Graph | str | graph6.Record], which: Sequence[str] | str,
                threads: int = 1, spec: dict[str, Any] | None = None,
                chunk: int = 2000) -> VerificationReport:
    """Apply lemma checks ("1"-"4") and theorem checks ("D", "E") across ``source``."""
    which = tuple(which)
    for w in which:
        if w not in LEMMA_CHECKS:
            raise ValueError(f"unknown check {w!r}; choose from {LEMMA_CHECKS}")
    spec = dict(spec or {}, which=list(which))
    return _sweep("lemmas", spec, source, extra=(which,), threads=threads, chunk=chunk)


def tightness_search(delta: int, q_from: int, q_to: int, n_max: int | None = None,
                     threads: int = 1) -> VerificationReport:
    """All 2-connected graphs with min degree exactly ``delta`` and q in
    [q_from, q_to] that have a non-dominating longest cycle."""
    if delta < 2 or q_from > q_to:
        raise ValueError("need delta >= 2 and q_from <= q_to")
    top = 2 * q_to // delta
    if n_max is not None:
        top = min(top, n_max)
    if top > MAX_ENUM_ORDER:
        raise ValueError(f"domain reaches n={top} > {MAX_ENUM_ORDER}; lower n_max")

    def domain() -> Iterator[Graph]:
        for n in range(delta + 1, top + 1):
            cap = min(q_to, n * (n - 1) // 2)
            for _, g in iter_unordered(EnumSpec(n, delta, cap, True)):
                if g.min_degree() == delta and g.size() >= q_from:
                    yield g

    spec = {"delta": delta, "q_from": q_from, "q_to": q_to, "n_max": top}
    return _sweep("tightness", spec, domain(), threads=threads)


# -- sharpness gallery ----------------------------------------------------------


@dataclass
class GalleryEntry:
    name: str
    role: str
    graph: Graph
    analysis: dict[str, Any]


def analyze_graph(g: Graph) -> dict[str, Any]:
    """n, q, delta, kappa, longest cycle, hamiltonicity and domination status."""
    length = longest_cycle_length(g)
    found = nondominating_longest_cycle(g, length)
    out: dict[str, Any] = {
        "n": g.n, "q": g.size(), "delta": g.min_degree(),
        "kappa": vertex_connectivity(g) if g.n >= 2 else 0,
        "longest": length, "hamiltonian": g.n >= 3 and length == g.n,
        "nondominating_longest_cycle": found is not None,
    }
    if found is not None:
        out["witness_cycle"] = list(found[0].verts)
        out["witness_edge"] = list(found[1])
    return out


def _claim(role: str, delta: int, a: dict[str, Any]) -> tuple[bool, str]:
    """Does the graph do the job its sharpness role asks of it?"""
    notes = []
    if a["delta"] != delta:
        notes.append(f"min degree {a['delta']} != {delta}")
    if role == "connectivity":
        if a["kappa"] != 1:
            notes.append(f"kappa={a['kappa']} is not 1")
        if a["q"] > q_max(delta):
            notes.append(f"q={a['q']} exceeds q_max={q_max(delta)}")
        if not a["nondominating_longest_cycle"]:
            notes.append("every longest cycle dominates")
    elif role == "size":
        if a["kappa"] < 2:
            notes.append(f"kappa={a['kappa']} < 2")
        if a["q"] > relaxed_bound(delta):
            notes.append(f"q={a['q']} exceeds the relaxed bound {relaxed_bound(delta)}")
        if not a["nondominating_longest_cycle"]:
            notes.append("every longest cycle dominates")
    elif role == "conclusion":
        if a["kappa"] < 2:
            notes.append(f"kappa={a['kappa']} < 2")
        if a["q"] > q_max(delta):
            notes.append(f"q={a['q']} exceeds q_max={q_max(delta)}")
        if a["nondominating_longest_cycle"]:
            notes.append("some longest cycle fails to dominate")
        if a["hamiltonian"]:
            notes.append("graph is hamiltonian")
    return not notes, "; ".join(notes)


def sharpness_gallery(delta: int) -> list[GalleryEntry]:
    """The extremal constructions for min degree ``delta``, each analysed."""
    if delta < 2:
        raise ValueError("gallery defined for delta >= 2")
    items: list[tuple[str, str, Callable[[], Graph]]] = [
        (f"K1+2K{delta}", "connectivity", lambda: join(complete(1), copies(complete(delta), 2))),
    ]
    if delta >= 3:
        items.append((f"K2+3K{delta - 1}", "size",
                      lambda: join(complete(2), copies(complete(delta - 1), 3))))
    else:
        items.append(("witness8", "size", witness8))
    items.append((f"K{delta}+{delta + 1}K1", "conclusion",
                  lambda: join(complete(delta), empty(delta + 1))))
    out = []
    for name, role, make in items:
        g = make()
        a = analyze_graph(g)
        a["q_max"] = q_max(delta)
        a["relaxed_bound"] = relaxed_bound(delta)
        ok, note = _claim(role, delta, a)
        a["claim_holds"] = ok
        if note:
            a["discrepancy"] = note
        out.append(GalleryEntry(name, role, g, a))
    return out
