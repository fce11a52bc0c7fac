"""Isomorph-free generation of small graphs by canonical augmentation.

A graph on k+1 vertices is produced from its parent on k vertices by adding
vertex k adjacent to a subset S. The child is kept only when the new vertex
lies in the automorphism orbit of the child's canonical deletion vertex:
among the vertices of maximum degree (ties broken by the sum of neighbor
degrees) the one with the largest canonical position. Isomorphic siblings
from the same parent are removed by certificate. Degree-deficit and
edge-budget pruning are hereditary, so they never cut off an ancestor of a
graph that satisfies the constraints.
"""

from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterator, Sequence

from .canon import canonical_labeling, orbits
from .graph import Graph, bits, is_biconnected

MAX_ENUM_ORDER = 12


@dataclass(frozen=True)
class EnumSpec:
    n: int
    min_deg: int = 0
    max_edges: int | None = None
    require_biconnected: bool = False

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ENUM_ORDER:
            raise ValueError(f"n must lie in 1..{MAX_ENUM_ORDER}, got {self.n}")
        if not 0 <= self.min_deg < self.n:
            raise ValueError(f"min_deg must lie in 0..n-1, got {self.min_deg}")
        if self.max_edges is not None and not 0 <= self.max_edges <= self.n * (self.n - 1) // 2:
            raise ValueError(f"max_edges must lie in 0..n(n-1)/2, got {self.max_edges}")

    @property
    def edge_cap(self) -> int:
        return self.n * (self.n - 1) // 2 if self.max_edges is None else self.max_edges


def _min_added_edges(remaining: int, min_deg: int, deficit: int) -> int:
    """Lower bound on edges still to come when ``remaining`` vertices are added."""
    if remaining == 0:
        return 0
    to_old = max(deficit, remaining * (min_deg - remaining + 1))
    return (to_old + remaining * min_deg + 1) // 2


class _Generator:
    def __init__(self, spec: EnumSpec):
        self.N = spec.n
        self.min_deg = spec.min_deg
        self.cap = spec.edge_cap

    def children(self, adj: Sequence[int], k: int) -> Iterator[tuple[tuple[int, ...], int, list[int]]]:
        """Accepted children of a k-vertex parent as ``(adj, cert, canonical order)``."""
        N, md = self.N, self.min_deg
        after = N - k - 1
        degs = [row.bit_count() for row in adj]
        q = sum(degs) // 2
        top = max(degs) if k else 0
        forced = 0
        for u in range(k):
            if degs[u] + after < md:
                forced |= 1 << u
        nforced = forced.bit_count()
        seen: set[int] = set()
        for s in range(max(top, md - after, nforced), k + 1):
            if q + s > self.cap:
                break
            # the new vertex must have maximum degree: u in S needs deg(u) < s
            if any(degs[u] >= s for u in bits(forced)):
                continue
            optional = [u for u in range(k) if not forced >> u & 1 and degs[u] < s]
            for extra in combinations(optional, s - nforced):
                S = forced
                for u in extra:
                    S |= 1 << u
                child = self._accept(adj, degs, k, S, s, q + s, after, seen)
                if child is not None:
                    yield child

    def _accept(self, adj, degs, k, S, s, q, after, seen):
        md = self.min_deg
        deficit = max(0, md - s)
        cdeg = degs[:]
        for u in bits(S):
            cdeg[u] += 1
        for d in cdeg:
            if d < md:
                deficit += md - d
        if after == 0 and deficit:
            return None
        if q + _min_added_edges(after, md, deficit) > self.cap:
            return None
        rows = [row | (1 << k) if S >> u & 1 else row for u, row in enumerate(adj)]
        rows.append(S)
        cdeg.append(s)
        # cheap invariant: sum of neighbor degrees among max-degree vertices
        mine = sum(cdeg[u] for u in bits(S))
        ties = [k]
        for u in range(k):
            if cdeg[u] == s:
                other = sum(cdeg[w] for w in bits(rows[u]))
                if other > mine:
                    return None
                if other == mine:
                    ties.append(u)
        cert, order, gens = canonical_labeling(rows, k + 1)
        if len(ties) > 1:
            pos = [0] * (k + 1)
            for i, v in enumerate(order):
                pos[v] = i
            chosen = max(ties, key=lambda v: pos[v])
            if chosen != k:
                orb = orbits(k + 1, gens)
                if orb[chosen] != orb[k]:
                    return None
        if cert in seen:
            return None
        seen.add(cert)
        return tuple(rows), cert, order


def _passes_final(spec: EnumSpec, g: Graph) -> bool:
    if g.min_degree() < spec.min_deg or g.size() > spec.edge_cap:
        return False
    return not spec.require_biconnected or is_biconnected(g)


def _walk(gen: _Generator, adj: tuple[int, ...], k: int, cert: int, order: list[int]
          ) -> Iterator[tuple[int, Graph]]:
    if k == gen.N:
        yield cert, Graph(k, tuple(adj)).relabel(order)
        return
    for child, ccert, corder in gen.children(adj, k):
        yield from _walk(gen, child, k + 1, ccert, corder)


def _root(spec: EnumSpec) -> tuple[tuple[int, ...], int, list[int]]:
    return (0,), 0, [0]


def iter_unordered(spec: EnumSpec) -> Iterator[tuple[int, Graph]]:
    """Yield ``(cert, canonical graph)`` in generation-tree order."""
    gen = _Generator(spec)
    adj, cert, order = _root(spec)
    if spec.n == 1:
        if spec.min_deg == 0 and not spec.require_biconnected:
            yield cert, Graph(1, adj)
        return
    for cert, g in _walk(gen, adj, 1, cert, order):
        if _passes_final(spec, g):
            yield cert, g


def subtree_roots(spec: EnumSpec, depth: int) -> list[tuple[tuple[int, ...], int, list[int]]]:
    """All accepted graphs at level ``depth`` (>= 1); work units for parallel runs."""
    gen = _Generator(spec)
    level = [_root(spec)]
    for k in range(1, depth):
        level = [c for adj, _, _ in level for c in gen.children(adj, k)]
    return level


def iter_subtree(spec: EnumSpec, root: tuple[tuple[int, ...], int, list[int]], depth: int
                 ) -> Iterator[tuple[int, Graph]]:
    gen = _Generator(spec)
    adj, cert, order = root
    for c, g in _walk(gen, adj, depth, cert, order):
        if _passes_final(spec, g):
            yield c, g


def enumerate_graphs(spec: EnumSpec) -> list[Graph]:
    """One canonically labeled representative per isomorphism class, sorted by
    canonical bit string."""
    return [g for _, g in sorted(iter_unordered(spec), key=lambda t: t[0])]


def count(spec: EnumSpec) -> int:
    return sum(1 for _ in iter_unordered(spec))
