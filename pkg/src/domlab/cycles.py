"""Exact longest cycles and paths on small graphs.

Lengths count edges. Cycles have at least three vertices; the one- and
two-vertex "cycles" some texts allow are never produced here.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Sequence

from .graph import Graph, bits, is_biconnected, mask_of, reachable


class CycleError(ValueError):
    pass


def canonical_rotation(verts: Sequence[int]) -> tuple[int, ...]:
    """Rotate to the minimum vertex, then orient toward its smaller neighbor."""
    k = len(verts)
    i = min(range(k), key=verts.__getitem__)
    fwd = tuple(verts[(i + j) % k] for j in range(k))
    if k > 2 and fwd[-1] < fwd[1]:
        return (fwd[0],) + fwd[:0:-1]
    return fwd


@dataclass(frozen=True)
class Cycle:
    verts: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, verts: Sequence[int]) -> "Cycle":
        verts = tuple(verts)
        if len(verts) < 3:
            raise CycleError("a cycle needs at least three vertices")
        if len(set(verts)) != len(verts):
            raise CycleError(f"repeated vertex in cycle {verts}")
        for a, b in zip(verts, verts[1:] + verts[:1]):
            if not (0 <= a < g.n and 0 <= b < g.n) or not g.has_edge(a, b):
                raise CycleError(f"{a}-{b} is not an edge")
        return cls(canonical_rotation(verts))

    def __len__(self) -> int:
        return len(self.verts)

    @property
    def length(self) -> int:
        return len(self.verts)

    @property
    def mask(self) -> int:
        return mask_of(self.verts)

    def validate(self, g: Graph) -> None:
        Cycle.of(g, self.verts)


@dataclass(frozen=True)
class Path:
    verts: tuple[int, ...]

    @classmethod
    def of(cls, g: Graph, verts: Sequence[int]) -> "Path":
        verts = tuple(verts)
        if not verts:
            raise CycleError("a path needs at least one vertex")
        if len(set(verts)) != len(verts):
            raise CycleError(f"repeated vertex in path {verts}")
        for a, b in zip(verts, verts[1:]):
            if not g.has_edge(a, b):
                raise CycleError(f"{a}-{b} is not an edge")
        return cls(verts)

    @property
    def length(self) -> int:
        return len(self.verts) - 1

    @property
    def mask(self) -> int:
        return mask_of(self.verts)

    @property
    def ends(self) -> tuple[int, int]:
        return self.verts[0], self.verts[-1]


# -- longest cycle ----------------------------------------------------------


def _longest_from(adj: Sequence[int], s: int, allowed: int, best: int, stop: int) -> tuple[int, list[int] | None]:
    """Longest cycle through ``s`` inside ``allowed | {s}`` that beats ``best``.

    Returns ``(length, cycle)``; ``cycle`` is None when nothing beat ``best``.
    The search ends early once a cycle of length ``stop`` is found.
    """
    s_nb = adj[s] & allowed
    found: list[int] | None = None
    path = [s]

    def dfs(cur: int, visited: int) -> bool:
        nonlocal best, found
        free = allowed & ~visited
        k = len(path)
        if k >= 3 and adj[cur] >> s & 1 and k > best:
            best = k
            found = path[:]
            if best >= stop:
                return True
        reach = reachable(adj, cur, free | (1 << cur)) & free
        if k + reach.bit_count() <= best or not reach & s_nb:
            return False
        for nxt in bits(adj[cur] & free):
            path.append(nxt)
            if dfs(nxt, visited | (1 << nxt)):
                return True
            path.pop()
        return False

    dfs(s, 1 << s)
    return best, found


def _search_longest(g: Graph, stop: int | None = None) -> tuple[int, list[int] | None]:
    n = g.n
    stop = n if stop is None else stop
    best, witness = 0, None
    full = g.all_vertices
    for s in range(n):
        allowed = full & ~((1 << (s + 1)) - 1)
        pool = reachable(g.adj, s, allowed | (1 << s))
        if pool.bit_count() <= max(best, 2):
            continue
        length, cyc = _longest_from(g.adj, s, pool & ~(1 << s), best, stop)
        if cyc is not None:
            best, witness = length, cyc
            if best >= stop:
                break
    return best, witness


def longest_cycle_length(g: Graph) -> int:
    """Exact length of a longest cycle, 0 if ``g`` is acyclic."""
    return _search_longest(g)[0]


def longest_cycle(g: Graph) -> Cycle | None:
    length, cyc = _search_longest(g)
    return Cycle(canonical_rotation(cyc)) if cyc else None


def has_cycle_at_least(g: Graph, length: int) -> bool:
    if length > g.n:
        return False
    return _search_longest(g, stop=max(length, 3))[0] >= max(length, 3)


def is_hamiltonian(g: Graph) -> bool:
    return g.n >= 3 and has_cycle_at_least(g, g.n)


def cycles_of_length(g: Graph, length: int, limit: int | None = None) -> list[Cycle]:
    """Every cycle with ``length`` vertices, once each, canonically oriented."""
    adj = g.adj
    out: list[Cycle] = []
    if length < 3 or length > g.n:
        return out
    full = g.all_vertices
    for s in range(g.n - length + 1):
        allowed = full & ~((1 << (s + 1)) - 1)
        pool = reachable(adj, s, allowed | (1 << s)) & ~(1 << s)
        if pool.bit_count() + 1 < length:
            continue
        s_nb = adj[s] & pool
        path = [s]

        def dfs(cur: int, visited: int) -> bool:
            k = len(path)
            if k == length:
                if adj[cur] >> s & 1 and path[1] < path[-1]:
                    out.append(Cycle(tuple(path)))
                    if limit is not None and len(out) >= limit:
                        return True
                return False
            free = pool & ~visited
            reach = reachable(adj, cur, free | (1 << cur)) & free
            if k + reach.bit_count() < length or not reach & s_nb:
                return False
            for nxt in bits(adj[cur] & free):
                path.append(nxt)
                if dfs(nxt, visited | (1 << nxt)):
                    return True
                path.pop()
            return False

        if dfs(s, 1 << s):
            break
    return out


def all_longest_cycles(g: Graph) -> list[Cycle]:
    return cycles_of_length(g, longest_cycle_length(g))


# -- domination -------------------------------------------------------------


def off_cycle_edge(g: Graph, c: Cycle) -> tuple[int, int] | None:
    """An edge with both endpoints off ``c`` (smallest first), or None."""
    outside = g.all_vertices & ~c.mask
    for u in bits(outside):
        hit = g.adj[u] & outside & ~((1 << (u + 1)) - 1)
        if hit:
            return u, (hit & -hit).bit_length() - 1
    return None


def is_dominating(g: Graph, c: Cycle) -> bool:
    c.validate(g)
    return off_cycle_edge(g, c) is None


def nondominating_longest_cycle(g: Graph, length: int | None = None) -> tuple[Cycle, tuple[int, int]] | None:
    """A longest cycle missing some edge entirely, with that edge; None if every
    longest cycle dominates.

    Uses the equivalence: some longest cycle avoids edge uv iff g - u - v still
    has a cycle of the longest length. No cycle enumeration is needed.
    """
    if length is None:
        length = longest_cycle_length(g)
    if length == 0 or length >= g.n - 1:
        return None
    for u, v in g.edges():
        keep = g.all_vertices & ~(1 << u) & ~(1 << v)
        sub, labels = g.induced(keep)
        found, cyc = _search_longest(sub, stop=length)
        if found >= length:
            cycle = Cycle(canonical_rotation([labels[i] for i in cyc]))
            return cycle, (u, v)
    return None


# -- paths ------------------------------------------------------------------


def longest_paths(g: Graph, within: int) -> list[Path]:
    """All maximum-length paths of ``g[within]``, each once with first <= last,
    in lexicographic order of their vertex sequences."""
    if not within:
        return []
    adj = g.adj
    best = 0
    found: list[tuple[int, ...]] = []
    path: list[int] = []

    def dfs(cur: int, visited: int) -> None:
        nonlocal best, found
        k = len(path)
        free = within & ~visited
        reach = reachable(adj, cur, free | (1 << cur)) & free
        if k + reach.bit_count() < best:
            return
        if k > best:
            best, found = k, []
        if k == best and path[0] <= path[-1]:
            found.append(tuple(path))
        for nxt in bits(adj[cur] & free):
            path.append(nxt)
            dfs(nxt, visited | (1 << nxt))
            path.pop()

    for s in bits(within):
        path.append(s)
        dfs(s, 1 << s)
        path.pop()
    return [Path(p) for p in sorted(found)]


def remainder_mask(g: Graph, c: Cycle) -> int:
    return g.all_vertices & ~c.mask


def longest_path_in_remainder(g: Graph, c: Cycle) -> Path | None:
    """A longest path of ``g - V(c)``; the lexicographically least one on ties."""
    c.validate(g)
    paths = longest_paths(g, remainder_mask(g, c))
    return paths[0] if paths else None


def remainder_path_length(g: Graph, c: Cycle) -> int | None:
    p = longest_path_in_remainder(g, c)
    return None if p is None else p.length


# -- classical predicates ---------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    hypothesis: bool
    conclusion: bool

    @property
    def holds(self) -> bool:
        return not self.hypothesis or self.conclusion


@dataclass(frozen=True)
class ClassicalPredicates:
    n: int
    q: int
    delta: int
    longest: int
    hamiltonian: bool
    theorem_c: TheoremCheck
    theorem_d: TheoremCheck
    theorem_e: TheoremCheck
    theorem_f: TheoremCheck

    def as_dict(self) -> dict:
        out = {"n": self.n, "q": self.q, "delta": self.delta,
               "longest": self.longest, "hamiltonian": self.hamiltonian}
        for name in ("theorem_c", "theorem_d", "theorem_e", "theorem_f"):
            t = getattr(self, name)
            out[name] = {"hypothesis": t.hypothesis, "conclusion": t.conclusion, "holds": t.holds}
        return out


def theorem_e_bound(cycle_length: int, pbar: int, delta: int) -> bool:
    """|C| >= (pbar + 2)(delta - pbar)."""
    return cycle_length >= (pbar + 2) * (delta - pbar)


def classical_predicates(g: Graph, cycles: Iterable[Cycle] | None = None) -> ClassicalPredicates:
    """Evaluate the hypotheses and conclusions of four classical theorems.

    * C: q <= delta^2 + delta - 1 implies hamiltonian.
    * D: 2-connected implies hamiltonian or a cycle of length >= 2 delta.
    * E: every longest cycle C with a nonempty remainder satisfies
      |C| >= (pbar + 2)(delta - pbar), pbar the longest remainder path length.
    * F: d(x) + d(y) >= n for all nonadjacent x, y implies hamiltonian.

    Hamiltonicity needs a cycle of length >= 3, so C and F are only
    hypothesised for n >= 3.
    """
    n, q, delta = g.n, g.size(), g.min_degree()
    longest = longest_cycle_length(g)
    ham = n >= 3 and longest == n

    thm_c = TheoremCheck(n >= 3 and q <= delta * delta + delta - 1, ham)
    thm_d = TheoremCheck(is_biconnected(g), ham or longest >= 2 * delta)

    e_hyp = 3 <= longest < n
    e_ok = True
    if e_hyp:
        for c in (cycles_of_length(g, longest) if cycles is None else cycles):
            p = longest_path_in_remainder(g, c)
            if p is not None and not theorem_e_bound(c.length, p.length, delta):
                e_ok = False
                break
    thm_e = TheoremCheck(e_hyp, e_ok)

    degs = g.degrees()
    f_hyp = n >= 3 and all(
        degs[x] + degs[y] >= n
        for x in range(n) for y in range(x + 1, n) if not g.has_edge(x, y)
    )
    thm_f = TheoremCheck(f_hyp, ham)
    return ClassicalPredicates(n, q, delta, longest, ham, thm_c, thm_d, thm_e, thm_f)
