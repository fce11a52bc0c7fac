"""Elementary segments of a longest cycle and the four lemma checks.

Notation follows the usual longest-cycle toolkit: ``C`` a longest cycle,
``P = x..y`` a longest path of ``G - V(C)`` with ``pbar`` edges, ``xi`` the
vertices of ``N_C(x) | N_C(y)`` in cycle order, and ``I_i`` the arc of ``C``
from ``xi_i`` to ``xi_{i+1}``. Every inequality is checked in integers.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import combinations
from typing import Any

from .cycles import (Cycle, Path, cycles_of_length, longest_cycle_length, longest_paths,
                     off_cycle_edge, remainder_mask)
from .graph import Graph, VertexSet, bits, component_masks, is_biconnected, mask_of


class SegmentError(ValueError):
    pass


@dataclass(frozen=True)
class Segment:
    start: int          # xi_i
    end: int            # xi_{i+1}
    length: int         # |I_i| in edges
    interior: tuple[int, ...]

    @property
    def interior_mask(self) -> int:
        return mask_of(self.interior)


@dataclass(frozen=True)
class SegmentDecomposition:
    cycle: Cycle
    path: Path
    xi: tuple[int, ...]
    segments: tuple[Segment, ...]

    @property
    def s(self) -> int:
        return len(self.xi)


@dataclass(frozen=True)
class IntermediatePath:
    verts: tuple[int, ...]
    a_idx: int
    b_idx: int

    @property
    def length(self) -> int:
        return len(self.verts) - 1


@dataclass
class LemmaVerdict:
    lemma: str
    applicable: bool
    holds: bool | None = None
    lhs: int | None = None
    rhs: int | None = None
    witness: dict[str, Any] = field(default_factory=dict)

    def as_dict(self) -> dict[str, Any]:
        return {"lemma": self.lemma, "applicable": self.applicable, "holds": self.holds,
                "lhs": self.lhs, "rhs": self.rhs, "witness": self.witness}


def _cycle_neighbors(g: Graph, c: Cycle, v: int) -> int:
    return g.adj[v] & c.mask


def decompose(g: Graph, c: Cycle, p: Path) -> SegmentDecomposition:
    x, y = p.ends
    attach = _cycle_neighbors(g, c, x) | _cycle_neighbors(g, c, y)
    if not attach:
        raise SegmentError("path endpoints have no neighbor on the cycle")
    verts = c.verts
    t = len(verts)
    idx = [i for i, v in enumerate(verts) if attach >> v & 1]
    segments = []
    for j, i in enumerate(idx):
        nxt = idx[(j + 1) % len(idx)]
        span = (nxt - i) % t or t
        interior = tuple(verts[(i + h) % t] for h in range(1, span))
        segments.append(Segment(verts[i], verts[nxt], span, interior))
    return SegmentDecomposition(c, p, tuple(verts[i] for i in idx), tuple(segments))


def intermediate_paths(g: Graph, c: Cycle, p: Path, dec: SegmentDecomposition,
                       a: int, b: int) -> list[IntermediatePath]:
    """Every path from the interior of segment ``a`` to the interior of segment
    ``b`` whose inner vertices avoid the cycle and the path."""
    if a == b:
        raise SegmentError("intermediate paths join two distinct segments")
    start = dec.segments[a].interior_mask
    goal = dec.segments[b].interior_mask
    free = g.all_vertices & ~c.mask & ~p.mask
    adj = g.adj
    found: list[IntermediatePath] = []
    route: list[int] = []

    def dfs(cur: int, visited: int) -> None:
        for w in bits(adj[cur] & goal):
            found.append(IntermediatePath(tuple(route) + (w,), a, b))
        for nxt in bits(adj[cur] & free & ~visited):
            route.append(nxt)
            dfs(nxt, visited | (1 << nxt))
            route.pop()

    for z in bits(start):
        route.append(z)
        dfs(z, 1 << z)
        route.pop()
    return found


def all_are_edges(paths: list[IntermediatePath]) -> bool:
    """True when every intermediate path is a single edge (vacuous when empty)."""
    return all(len(L.verts) == 2 for L in paths)


# -- lemma 1 ----------------------------------------------------------------


def check_lemma1(g: Graph, c: Cycle, p: Path) -> LemmaVerdict:
    """Cycle length lower bound when the endpoint attachments differ.

    Applicable when pbar >= 1, |N_C(x)| >= 2, |N_C(y)| >= 2 and N_C(x) != N_C(y).
    Bound: 3 delta + max(sigma1, sigma2) - 1 when pbar = 1, otherwise
    max(2 pbar + 8, 4 delta - 2 pbar).
    """
    x, y = p.ends
    pbar = p.length
    nx, ny = _cycle_neighbors(g, c, x), _cycle_neighbors(g, c, y)
    witness = {"cycle": list(c.verts), "path": list(p.verts), "pbar": pbar,
               "N_C(x)": list(bits(nx)), "N_C(y)": list(bits(ny))}
    if pbar < 1 or nx.bit_count() < 2 or ny.bit_count() < 2 or nx == ny:
        return LemmaVerdict("1", False, witness=witness)
    delta = g.min_degree()
    sigma1 = (nx & ~ny).bit_count()
    sigma2 = (ny & ~nx).bit_count()
    if pbar == 1:
        rhs = 3 * delta + max(sigma1, sigma2) - 1
    else:
        rhs = max(2 * pbar + 8, 4 * delta - 2 * pbar)
    witness.update(sigma1=sigma1, sigma2=sigma2, delta=delta)
    return LemmaVerdict("1", True, c.length >= rhs, c.length, rhs, witness)


# -- lemma 2 ----------------------------------------------------------------


def check_lemma2(g: Graph, c: Cycle, p: Path) -> list[LemmaVerdict]:
    """Per segment pair: (a1) |I_a|+|I_b| >= 2 pbar + 2|L| + 4 for the longest
    intermediate path L, and (a2) |I_a|+|I_b| >= 2 pbar + i + 5 when the
    i in {1, 2, 3} intermediate paths are all single edges.

    Applicable when N_C(x) = N_C(y) and |N_C(x)| >= 2. A pair with no
    intermediate path holds vacuously (``rhs`` None); i >= 4 leaves (a2) out.
    """
    x, y = p.ends
    nx, ny = _cycle_neighbors(g, c, x), _cycle_neighbors(g, c, y)
    if nx != ny or nx.bit_count() < 2:
        return [LemmaVerdict("2", False, witness={"cycle": list(c.verts), "path": list(p.verts)})]
    dec = decompose(g, c, p)
    pbar = p.length
    out = []
    for a, b in combinations(range(dec.s), 2):
        seg_a, seg_b = dec.segments[a], dec.segments[b]
        lhs = seg_a.length + seg_b.length
        witness: dict[str, Any] = {"cycle": list(c.verts), "path": list(p.verts), "pbar": pbar,
                                   "a": a, "b": b, "I_a": seg_a.length, "I_b": seg_b.length}
        paths = intermediate_paths(g, c, p, dec, a, b) if seg_a.interior and seg_b.interior else []
        if not paths:
            witness["M"] = 0
            out.append(LemmaVerdict("2", True, True, lhs, None, witness))
            continue
        longest = max(paths, key=lambda L: (L.length, L.verts))
        rhs_a1 = 2 * pbar + 2 * longest.length + 4
        rhs = rhs_a1
        rhs_a2 = None
        if all_are_edges(paths) and len(paths) <= 3:
            rhs_a2 = 2 * pbar + len(paths) + 5
            rhs = max(rhs, rhs_a2)
        witness.update(M=len(paths), longest_L=list(longest.verts), a1_rhs=rhs_a1, a2_rhs=rhs_a2)
        out.append(LemmaVerdict("2", True, lhs >= rhs, lhs, rhs, witness))
    return out


# -- lemma 3 ----------------------------------------------------------------


def is_cut_set(g: Graph, s_set: VertexSet) -> bool:
    rest = g.all_vertices & ~s_set.bits
    return len(component_masks(g, rest)) >= 2


def check_lemma3(g: Graph, s_set: VertexSet) -> list[LemmaVerdict]:
    """For each component H of g - S with h vertices: 2 q_H >= h (2 delta - h + 1),
    q_H counting edges with at least one end in H."""
    if s_set.n != g.n:
        raise SegmentError("vertex set belongs to a graph of another order")
    if not is_cut_set(g, s_set):
        raise SegmentError("S is not a cut set")
    delta = g.min_degree()
    out = []
    for comp in component_masks(g, g.all_vertices & ~s_set.bits):
        h = comp.bit_count()
        inside = sum((g.adj[v] & comp).bit_count() for v in bits(comp)) // 2
        leaving = sum((g.adj[v] & ~comp).bit_count() for v in bits(comp))
        q_h = inside + leaving
        rhs = h * (2 * delta - h + 1)
        out.append(LemmaVerdict("3", True, 2 * q_h >= rhs, 2 * q_h, rhs,
                                {"S": list(s_set), "H": list(bits(comp)), "h": h, "q_H": q_h,
                                 "delta": delta}))
    return out


def cut_sets(g: Graph) -> list[VertexSet]:
    """Every vertex subset whose removal leaves at least two components."""
    return [VertexSet(m, g.n) for m in range(1 << g.n)
            if len(component_masks(g, g.all_vertices & ~m)) >= 2]


# -- lemma 4 ----------------------------------------------------------------


def lemma4_threshold(delta: int) -> int:
    if delta < 2:
        raise ValueError("threshold defined for delta >= 2")
    if delta == 2:
        return 9
    return 3 * (delta - 1) * (delta + 2) // 2


def check_lemma4(g: Graph) -> LemmaVerdict:
    """When 3 delta >= n - 2: q >= threshold(delta) or every longest cycle dominates."""
    if not is_biconnected(g):
        raise SegmentError("lemma 4 needs a 2-connected graph")
    n, q, delta = g.n, g.size(), g.min_degree()
    witness: dict[str, Any] = {"n": n, "q": q, "delta": delta}
    if 3 * delta < n - 2:
        return LemmaVerdict("4", False, witness=witness)
    threshold = lemma4_threshold(delta)
    witness["threshold"] = threshold
    if q >= threshold:
        witness["branch"] = "size"
        return LemmaVerdict("4", True, True, q, threshold, witness)
    longest = longest_cycle_length(g)
    witness.update(branch="cycles", longest=longest)
    if longest >= n - 1:
        return LemmaVerdict("4", True, True, q, threshold, witness)
    for cyc in cycles_of_length(g, longest):
        edge = off_cycle_edge(g, cyc)
        if edge is not None:
            witness.update(cycle=list(cyc.verts), off_cycle_edge=list(edge))
            return LemmaVerdict("4", True, False, q, threshold, witness)
    return LemmaVerdict("4", True, True, q, threshold, witness)


# -- triples ----------------------------------------------------------------


def longest_triples(g: Graph) -> list[tuple[Cycle, list[Path]]]:
    """Each longest cycle with every maximum path of its (nonempty) remainder."""
    length = longest_cycle_length(g)
    if length == 0 or length == g.n:
        return []
    out = []
    for cyc in cycles_of_length(g, length):
        paths = longest_paths(g, remainder_mask(g, cyc))
        out.append((cyc, paths))
    return out


def extremal_segment_lengths_ok(g: Graph, c: Cycle, p: Path) -> bool | None:
    """Every elementary segment has at least two edges, checked when there are
    at least two attachment vertices (None otherwise)."""
    x, y = p.ends
    if not (_cycle_neighbors(g, c, x) | _cycle_neighbors(g, c, y)):
        return None
    dec = decompose(g, c, p)
    if dec.s < 2:
        return None
    return all(seg.length >= 2 for seg in dec.segments)
