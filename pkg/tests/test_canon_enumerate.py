from itertools import combinations, permutations

import networkx as nx
import pytest
from hypothesis import given, settings

from domlab.canon import (automorphism_orbits, canonical_form, canonical_graph, graph_from_cert,
                          is_isomorphic)
from domlab.enumerate import EnumSpec, count, enumerate_graphs, iter_subtree, subtree_roots
from domlab.graph import Graph, build, cycle_graph, is_biconnected
from oracles import burnside_graph_count, labeled_iso_classes, perm_canonical
from strategies import graph_and_permutation, graphs

# computed once with the brute-force oracles in oracles.py
COUNTS = {1: 1, 2: 2, 3: 4, 4: 11, 5: 34, 6: 156, 7: 1044, 8: 12346}


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def complement(g):
    full = g.all_vertices
    return Graph(g.n, tuple(full & ~row & ~(1 << v) for v, row in enumerate(g.adj)))


def test_form_examples():
    c5 = cycle_graph(5)
    assert canonical_form(c5) == canonical_form(c5.relabel([2, 4, 1, 3, 0]))
    assert canonical_form(c5.relabel([1, 0, 3, 2, 4])) == canonical_form(c5)
    p4 = build(4, [(0, 1), (1, 2), (2, 3)])
    star = build(4, [(0, 1), (0, 2), (0, 3)])
    assert canonical_form(p4) != canonical_form(star)


def test_all_labeled_graphs_on_four_vertices():
    pairs = list(combinations(range(4), 2))
    forms = {}
    for sel in range(1 << 6):
        g = build(4, [p for i, p in enumerate(pairs) if sel >> i & 1])
        forms.setdefault(canonical_form(g).cert, set()).add(perm_canonical(g.adj, 4))
    assert len(forms) == 11
    assert all(len(v) == 1 for v in forms.values())


@given(graph_and_permutation(max_n=10))
def test_form_is_relabeling_invariant(gp):
    g, perm = gp
    f = canonical_form(g)
    assert f == canonical_form(g.relabel(perm))
    assert canonical_graph(g) == graph_from_cert(g.n, f.cert)


@given(graphs(min_n=4, max_n=7), graphs(min_n=4, max_n=7))
def test_isomorphism_agrees_with_networkx(g1, g2):
    assert is_isomorphic(g1, g2) == nx.is_isomorphic(to_nx(g1), to_nx(g2))


@settings(max_examples=60)
@given(graphs(max_n=7))
def test_orbits_match_brute_force(g):
    auts = [p for p in permutations(range(g.n)) if g.relabel(p) == g]
    orb = automorphism_orbits(g)
    for v in range(g.n):
        images = {p[v] for p in auts}
        assert images == {u for u in range(g.n) if orb[u] == orb[v]}


@pytest.mark.parametrize("n", range(1, 6))
def test_counts_match_labeled_brute_force(n):
    assert count(EnumSpec(n)) == labeled_iso_classes(n) == COUNTS[n]


@pytest.mark.parametrize("n", range(1, 9))
def test_counts_match_orbit_counting(n):
    assert count(EnumSpec(n)) == burnside_graph_count(n) == COUNTS[n]


@pytest.mark.parametrize("n", range(1, 7))
def test_no_isomorphic_duplicates(n):
    gs = enumerate_graphs(EnumSpec(n))
    forms = [perm_canonical(g.adj, n) for g in gs]
    assert len(set(forms)) == len(gs)
    nxs = [to_nx(g) for g in gs]
    for i, j in combinations(range(len(gs)), 2):
        if sorted(gs[i].degrees()) == sorted(gs[j].degrees()):
            assert not nx.is_isomorphic(nxs[i], nxs[j])


def test_output_sorted_and_canonical():
    gs = enumerate_graphs(EnumSpec(6))
    certs = [canonical_form(g).cert for g in gs]
    assert certs == sorted(certs)
    assert all(canonical_graph(g) == g for g in gs)


def _filtered_classes(n, min_deg, max_edges, bicon):
    """Isomorphism classes of labeled n-vertex graphs meeting the constraints."""
    pairs = list(combinations(range(n), 2))
    seen = set()
    for sel in range(1 << len(pairs)):
        g = build(n, [p for i, p in enumerate(pairs) if sel >> i & 1])
        if g.min_degree() >= min_deg and g.size() <= max_edges and (not bicon or is_biconnected(g)):
            seen.add(perm_canonical(g.adj, n))
    return len(seen)


@pytest.mark.parametrize("n,min_deg,max_edges,bicon", [
    (5, 2, 8, True), (5, 1, 6, False), (5, 0, 3, False), (4, 2, 6, True), (5, 3, 10, False),
])
def test_constrained_counts(n, min_deg, max_edges, bicon):
    spec = EnumSpec(n, min_deg, max_edges, bicon)
    gs = enumerate_graphs(spec)
    for g in gs:
        assert g.min_degree() >= min_deg and g.size() <= max_edges
        assert not bicon or is_biconnected(g)
    assert len(gs) == _filtered_classes(n, min_deg, max_edges, bicon)


@pytest.mark.parametrize("n,min_deg,max_edges,bicon", [
    (7, 2, 9, True), (7, 3, 12, False), (8, 3, 14, True), (7, 0, 5, False), (8, 2, None, True),
])
def test_constrained_matches_filtered_unconstrained(n, min_deg, max_edges, bicon, all_by_n):
    cap = n * (n - 1) // 2 if max_edges is None else max_edges
    want = sorted(graph_cert(g) for g in all_by_n(n)
                  if g.min_degree() >= min_deg and g.size() <= cap and (not bicon or is_biconnected(g)))
    got = sorted(graph_cert(g) for g in enumerate_graphs(EnumSpec(n, min_deg, max_edges, bicon)))
    assert got == want


def graph_cert(g):
    return canonical_form(g).cert


@pytest.fixture(scope="module")
def all_by_n():
    cache = {}

    def get(n):
        if n not in cache:
            cache[n] = enumerate_graphs(EnumSpec(n))
        return cache[n]
    return get


@pytest.mark.parametrize("n", [5, 6, 7])
def test_complement_partition(n):
    total = COUNTS[n]
    top = n * (n - 1) // 2
    for m in range(0, top):
        assert count(EnumSpec(n, 0, m)) + count(EnumSpec(n, 0, top - m - 1)) == total


def test_complement_maps_classes_to_classes(all_by_n):
    gs = all_by_n(6)
    certs = {graph_cert(g) for g in gs}
    assert {graph_cert(complement(g)) for g in gs} == certs


@pytest.mark.parametrize("depth", [2, 4])
def test_subtrees_partition_the_tree(depth):
    spec = EnumSpec(7, 1)
    parts = [c for root in subtree_roots(spec, depth) for c, _ in iter_subtree(spec, root, depth)]
    assert sorted(parts) == sorted(graph_cert(g) for g in enumerate_graphs(spec))
    assert len(parts) == len(set(parts))


@pytest.mark.parametrize("kwargs", [
    {"n": 0}, {"n": 13}, {"n": 4, "min_deg": 4}, {"n": 4, "max_edges": 7}, {"n": 4, "min_deg": -1},
])
def test_spec_validation(kwargs):
    with pytest.raises(ValueError):
        EnumSpec(**kwargs)


def test_canonical_form_order_cap():
    with pytest.raises(ValueError):
        canonical_form(Graph(13, (0,) * 13))
