"""Small immutable graphs stored as neighbor bitsets.

Vertices are ``0..n-1`` and ``adj[v]`` is an int whose bit ``u`` is set when
``uv`` is an edge. Every construction returns a new :class:`Graph`.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

MAX_ORDER = 32


class GraphError(ValueError):
    """Raised for malformed graph input (bad vertex, loop, order overflow)."""


def bits(mask: int) -> Iterator[int]:
    """Yield the set bit positions of ``mask`` in increasing order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


@dataclass(frozen=True)
class VertexSet:
    """A set of vertices of a graph with ``n`` vertices, as a bitmask."""

    bits: int
    n: int

    def __post_init__(self) -> None:
        if self.bits < 0 or self.bits >> self.n:
            raise GraphError(f"vertex set {self.bits:#x} exceeds order {self.n}")

    @classmethod
    def of(cls, vertices: Iterable[int], n: int) -> "VertexSet":
        return cls(mask_of(vertices), n)

    def __iter__(self) -> Iterator[int]:
        return bits(self.bits)

    def __len__(self) -> int:
        return self.bits.bit_count()

    def __contains__(self, v: int) -> bool:
        return bool(self.bits >> v & 1)


@dataclass(frozen=True)
class Graph:
    n: int
    adj: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order {self.n} outside 1..{MAX_ORDER}")
        if len(self.adj) != self.n:
            raise GraphError("adjacency row count differs from order")
        full = (1 << self.n) - 1
        for v, row in enumerate(self.adj):
            if row & ~full:
                raise GraphError(f"vertex {v} has a neighbor outside 0..{self.n - 1}")
            if row >> v & 1:
                raise GraphError(f"loop at vertex {v}")
            for u in bits(row):
                if not self.adj[u] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {u}")

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"

    @property
    def all_vertices(self) -> int:
        return (1 << self.n) - 1

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    def neighbors(self, v: int) -> list[int]:
        return list(bits(self.adj[v]))

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    def degrees(self) -> list[int]:
        return [row.bit_count() for row in self.adj]

    def size(self) -> int:
        return sum(row.bit_count() for row in self.adj) // 2

    def min_degree(self) -> int:
        return min(row.bit_count() for row in self.adj)

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in bits(self.adj[u] >> (u + 1) << (u + 1))]

    def is_complete(self) -> bool:
        full = self.all_vertices
        return all(row | (1 << v) == full for v, row in enumerate(self.adj))

    def relabel(self, order: Sequence[int]) -> "Graph":
        """Graph whose vertex ``i`` is the old vertex ``order[i]``."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            m = 0
            for u in bits(self.adj[v]):
                m |= 1 << pos[u]
            rows.append(m)
        return Graph(self.n, tuple(rows))

    def induced(self, mask: int) -> tuple["Graph", list[int]]:
        """Induced subgraph on ``mask``, relabeled; returns it with the old labels."""
        verts = list(bits(mask))
        if not verts:
            raise GraphError("induced subgraph on an empty vertex set")
        pos = {v: i for i, v in enumerate(verts)}
        rows = tuple(mask_of(pos[u] for u in bits(self.adj[v] & mask)) for v in verts)
        return Graph(len(verts), rows), verts


def build(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order {n} outside 1..{MAX_ORDER}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) has a vertex outside 0..{n - 1}")
        if u == v:
            raise GraphError(f"loop at vertex {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph(n, tuple(rows))


def complete(k: int) -> Graph:
    if k < 1:
        raise GraphError("complete graph needs k >= 1")
    full = (1 << k) - 1
    return build(k, []) if k == 1 else Graph(k, tuple(full ^ (1 << v) for v in range(k)))


def empty(k: int) -> Graph:
    if k < 1:
        raise GraphError("empty graph needs k >= 1")
    return build(k, [])


def cycle_graph(k: int) -> Graph:
    if k < 3:
        raise GraphError("cycle graph needs k >= 3")
    return build(k, [(i, (i + 1) % k) for i in range(k)])


def disjoint_union(gs: Sequence[Graph]) -> Graph:
    if not gs:
        raise GraphError("disjoint union of no graphs")
    total = sum(g.n for g in gs)
    if total > MAX_ORDER:
        raise GraphError(f"disjoint union has order {total} > {MAX_ORDER}")
    rows: list[int] = []
    offset = 0
    for g in gs:
        rows.extend(row << offset for row in g.adj)
        offset += g.n
    return Graph(total, tuple(rows))


def join(g1: Graph, g2: Graph) -> Graph:
    """Disjoint union of ``g1`` and ``g2`` plus every edge between them."""
    n = g1.n + g2.n
    if n > MAX_ORDER:
        raise GraphError(f"join has order {n} > {MAX_ORDER}")
    left = (1 << g1.n) - 1
    right = ((1 << g2.n) - 1) << g1.n
    rows = [row | right for row in g1.adj]
    rows += [(row << g1.n) | left for row in g2.adj]
    return Graph(n, tuple(rows))


def copies(g: Graph, k: int) -> Graph:
    """``k`` disjoint copies of ``g`` (written ``kG``)."""
    return disjoint_union([g] * k)


def witness8() -> Graph:
    """The 8-vertex, 9-edge graph: a hexagon v1..v6 plus the path v1 v7 v8 v4.

    Vertex ``i`` here is v_{i+1}.
    """
    return build(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (0, 6), (6, 7), (7, 3)])


# -- connectivity ---------------------------------------------------------


def component_masks(g: Graph, within: int | None = None) -> list[int]:
    """Connected components of the subgraph induced on ``within`` (default: all)."""
    remaining = g.all_vertices if within is None else within
    comps = []
    while remaining:
        seed = remaining & -remaining
        comp = seed
        frontier = seed
        while frontier:
            nxt = 0
            for v in bits(frontier):
                nxt |= g.adj[v]
            nxt &= remaining & ~comp
            comp |= nxt
            frontier = nxt
        comps.append(comp)
        remaining &= ~comp
    return comps


def reachable(adj: Sequence[int], start: int, within: int) -> int:
    """Vertices of ``within`` reachable from ``start`` (start itself included)."""
    seen = 1 << start
    frontier = seen
    while frontier:
        nxt = 0
        for v in bits(frontier):
            nxt |= adj[v]
        nxt &= within & ~seen
        seen |= nxt
        frontier = nxt
    return seen


def is_connected(g: Graph, within: int | None = None) -> bool:
    within = g.all_vertices if within is None else within
    if not within:
        return True
    start = (within & -within).bit_length() - 1
    return reachable(g.adj, start, within) == within


def is_biconnected(g: Graph) -> bool:
    """True iff ``g`` is 2-connected (n >= 3, connected, no cut vertex)."""
    if g.n < 3:
        return False
    full = g.all_vertices
    if not is_connected(g, full):
        return False
    return all(is_connected(g, full & ~(1 << v)) for v in range(g.n))


def _local_connectivity(g: Graph, s: int, t: int) -> int:
    """Max number of internally disjoint s-t paths, s and t nonadjacent.

    Unit-capacity max flow on the split digraph: vertex v becomes v_in=2v,
    v_out=2v+1 joined by an arc of capacity 1 (infinite for s and t).
    """
    n = g.n
    big = n + 1
    cap: dict[tuple[int, int], int] = {}
    out: list[list[int]] = [[] for _ in range(2 * n)]

    def arc(a: int, b: int, c: int) -> None:
        if (a, b) not in cap:
            out[a].append(b)
            out[b].append(a)
            cap[(a, b)] = 0
            cap.setdefault((b, a), 0)
        cap[(a, b)] += c

    for v in range(n):
        arc(2 * v, 2 * v + 1, big if v in (s, t) else 1)
    for u, v in g.edges():
        arc(2 * u + 1, 2 * v, big)
        arc(2 * v + 1, 2 * u, big)

    source, sink = 2 * s + 1, 2 * t
    flow = 0
    while True:
        parent = {source: source}
        queue = deque([source])
        while queue and sink not in parent:
            a = queue.popleft()
            for b in out[a]:
                if b not in parent and cap[(a, b)] > 0:
                    parent[b] = a
                    queue.append(b)
        if sink not in parent:
            return flow
        b = sink
        while b != source:
            a = parent[b]
            cap[(a, b)] -= 1
            cap[(b, a)] += 1
            b = a
        flow += 1


def vertex_connectivity(g: Graph) -> int:
    """Size of a minimum vertex cut; ``n - 1`` for complete graphs, 0 if disconnected."""
    if g.is_complete():
        return g.n - 1
    if not is_connected(g):
        return 0
    # Even's scheme: some vertex among the first kappa+1 lies outside a minimum cut.
    best = g.min_degree()
    i = 0
    while i <= best:
        for j in range(i + 1, g.n):
            if not g.has_edge(i, j):
                best = min(best, _local_connectivity(g, i, j))
        i += 1
    return best
