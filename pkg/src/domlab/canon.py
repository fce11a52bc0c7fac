"""Canonical labeling by colour refinement plus individualization search.

The certificate of a labeling ``order`` (canonical position -> vertex) is the
upper-triangle adjacency bit string read column by column, i.e. the graph6
bit order, packed into an int with the first pair as the most significant
bit. The canonical labeling is the one with the largest certificate, so the
canonical graph tends to put its edges on low labels.

Search-tree pruning uses automorphisms: twin transpositions found up front
and automorphisms discovered whenever two leaves give the same certificate.
The discovered set generates the whole automorphism group, which is what
:func:`orbits` relies on.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, mask_of

MAX_CANON_ORDER = 12


@dataclass(frozen=True, order=True)
class CanonicalForm:
    """Canonical certificate; equality and ordering ignore the labeling."""

    n: int
    cert: int
    labeling: tuple[int, ...] = field(compare=False)

    @property
    def bitstring(self) -> str:
        length = self.n * (self.n - 1) // 2
        return format(self.cert, f"0{length}b") if length else ""

    def graph(self) -> Graph:
        return graph_from_cert(self.n, self.cert)


def graph_from_cert(n: int, cert: int) -> Graph:
    rows = [0] * n
    k = n * (n - 1) // 2
    for j in range(1, n):
        for i in range(j):
            k -= 1
            if cert >> k & 1:
                rows[i] |= 1 << j
                rows[j] |= 1 << i
    return Graph(n, tuple(rows))


def certificate(adj: Sequence[int], order: Sequence[int]) -> int:
    cert = 0
    for j in range(1, len(order)):
        rj = adj[order[j]]
        for i in range(j):
            cert = (cert << 1) | (rj >> order[i] & 1)
    return cert


def refine(adj: Sequence[int], cells: list[list[int]]) -> list[list[int]]:
    """Coarsest equitable refinement of an ordered partition.

    Cells split by their vertices' neighbor counts into every current cell;
    new subcells are ordered by that count vector, which keeps the result
    independent of vertex labels.
    """
    while True:
        masks = [mask_of(c) for c in cells]
        out: list[list[int]] = []
        changed = False
        for c in cells:
            if len(c) == 1:
                out.append(c)
                continue
            groups: dict[tuple[int, ...], list[int]] = {}
            for v in c:
                row = adj[v]
                groups.setdefault(tuple((row & m).bit_count() for m in masks), []).append(v)
            if len(groups) == 1:
                out.append(c)
            else:
                changed = True
                out.extend(groups[key] for key in sorted(groups))
        if not changed:
            return out
        cells = out


def _twin_transpositions(adj: Sequence[int], n: int, colour: list[int]) -> list[tuple[int, ...]]:
    gens = []
    linked = 0
    for u in range(n):
        if linked >> u & 1:
            continue
        last = u
        for v in range(u + 1, n):
            if colour[v] != colour[u] or linked >> v & 1:
                continue
            bu, bv = 1 << u, 1 << v
            if adj[u] & ~bv == adj[v] & ~bu:
                perm = list(range(n))
                perm[last], perm[v] = v, last
                gens.append(tuple(perm))
                linked |= bv
                last = v
    return gens


class _Search:
    def __init__(self, adj: Sequence[int], n: int, cells: list[list[int]]):
        self.adj = adj
        self.n = n
        colour = [0] * n
        for ci, c in enumerate(cells):
            for v in c:
                colour[v] = ci
        self.gens: list[tuple[int, ...]] = _twin_transpositions(adj, n, colour)
        self.best_cert = -1
        self.best_order: list[int] = []

    def run(self, cells: list[list[int]], prefix: list[int]) -> None:
        cells = refine(self.adj, cells)
        if len(cells) == self.n:
            order = [c[0] for c in cells]
            cert = certificate(self.adj, order)
            if cert > self.best_cert:
                self.best_cert = cert
                self.best_order = order
            elif cert == self.best_cert:
                perm = [0] * self.n
                for a, b in zip(self.best_order, order):
                    perm[a] = b
                self.gens.append(tuple(perm))
            return
        ti = next(i for i, c in enumerate(cells) if len(c) > 1)
        target = cells[ti]
        tried: list[int] = []
        for v in target:
            if tried and self._equivalent(v, tried, prefix):
                continue
            tried.append(v)
            rest = [u for u in target if u != v]
            self.run(cells[:ti] + [[v], rest] + cells[ti + 1:], prefix + [v])

    def _equivalent(self, v: int, tried: list[int], prefix: list[int]) -> bool:
        stab = [g for g in self.gens if all(g[p] == p for p in prefix)]
        if not stab:
            return False
        parent = list(range(self.n))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for g in stab:
            for a, b in enumerate(g):
                ra, rb = find(a), find(b)
                if ra != rb:
                    parent[ra] = rb
        rv = find(v)
        return any(find(t) == rv for t in tried)


def canonical_labeling(adj: Sequence[int], n: int,
                       cells: list[list[int]] | None = None
                       ) -> tuple[int, list[int], list[tuple[int, ...]]]:
    """Return ``(cert, order, generators)`` for the (optionally coloured) graph."""
    if cells is None:
        cells = [list(range(n))]
    search = _Search(adj, n, cells)
    search.run(cells, [])
    return search.best_cert, search.best_order, search.gens


def orbits(n: int, gens: Sequence[Sequence[int]]) -> list[int]:
    """Orbit representative (smallest member) of each vertex under ``gens``."""
    parent = list(range(n))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for g in gens:
        for a, b in enumerate(g):
            ra, rb = find(a), find(b)
            if ra != rb:
                parent[max(ra, rb)] = min(ra, rb)
    return [find(v) for v in range(n)]


def canonical_form(g: Graph) -> CanonicalForm:
    if g.n > MAX_CANON_ORDER:
        raise ValueError(f"canonical form supports n <= {MAX_CANON_ORDER}, got {g.n}")
    cert, order, _ = canonical_labeling(g.adj, g.n)
    return CanonicalForm(g.n, cert, tuple(order))


def canonical_graph(g: Graph) -> Graph:
    return g.relabel(canonical_form(g).labeling)


def automorphism_orbits(g: Graph) -> list[int]:
    _, _, gens = canonical_labeling(g.adj, g.n)
    return orbits(g.n, gens)


def is_isomorphic(g1: Graph, g2: Graph) -> bool:
    return g1.n == g2.n and g1.size() == g2.size() and canonical_form(g1) == canonical_form(g2)


__all__ = [
    "CanonicalForm", "canonical_form", "canonical_graph", "canonical_labeling",
    "automorphism_orbits", "orbits", "is_isomorphic", "graph_from_cert", "refine",
    "certificate",
]
