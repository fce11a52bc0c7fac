import networkx as nx
import pytest
from hypothesis import given

from domlab.graph import (Graph, GraphError, VertexSet, build, complete, copies, cycle_graph,
                          disjoint_union, empty, is_biconnected, is_connected, join,
                          vertex_connectivity, witness8)
from domlab.verify import all_graphs
from oracles import brute_connectivity
from strategies import graphs


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from(g.edges())
    return h


def test_build_examples():
    k1 = build(1, [])
    assert (k1.n, k1.size()) == (1, 0)
    assert build(4, [(u, v) for u in range(4) for v in range(u + 1, 4)]) == complete(4)
    w = witness8()
    assert (w.n, w.size(), w.min_degree()) == (8, 9, 2)


def test_witness_edges():
    w = witness8()
    expected = {(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (0, 5), (0, 6), (6, 7), (3, 7)}
    assert set(w.edges()) == expected


@pytest.mark.parametrize("g1,g2,n,q,delta", [
    (complete(1), copies(complete(2), 2), 5, 6, 2),
    (complete(2), empty(3), 5, 7, 2),
    (complete(4), empty(5), 9, 26, 4),
])
def test_join_examples(g1, g2, n, q, delta):
    g = join(g1, g2)
    assert (g.n, g.size(), g.min_degree()) == (n, q, delta)


def test_union_and_constants():
    assert disjoint_union([complete(2)] * 3).size() == 3
    assert disjoint_union([complete(2)] * 3).n == 6
    assert complete(5).size() == 10
    assert empty(3).size() == 0


@pytest.mark.parametrize("g,delta,q", [
    (join(complete(2), copies(complete(2), 3)), 3, 16),
    (witness8(), 2, 9),
    (cycle_graph(6), 2, 6),
])
def test_min_degree_examples(g, delta, q):
    assert (g.min_degree(), g.size()) == (delta, q)


@pytest.mark.parametrize("g,kappa", [
    (complete(4), 3),
    (join(complete(1), copies(complete(2), 2)), 1),
    (cycle_graph(6), 2),
    (witness8(), 2),
    (empty(3), 0),
])
def test_connectivity_examples(g, kappa):
    assert vertex_connectivity(g) == kappa


def test_invalid_graphs():
    with pytest.raises(GraphError):
        build(3, [(0, 0)])
    with pytest.raises(GraphError):
        build(3, [(0, 3)])
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))          # asymmetric rows
    with pytest.raises(GraphError):
        Graph(33, (0,) * 33)
    with pytest.raises(GraphError):
        VertexSet(0b1000, 3)


def test_relabel_and_induced():
    p3 = build(3, [(0, 1), (1, 2)])
    assert p3.relabel([1, 0, 2]) == build(3, [(0, 1), (0, 2)])
    sub, labels = witness8().induced(0b11000001)
    assert labels == [0, 6, 7]
    assert sub == build(3, [(0, 1), (1, 2)])


@given(graphs(max_n=10))
def test_handshake(g):
    assert sum(g.degrees()) == 2 * g.size()


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_degree_law(g1, g2):
    g = join(g1, g2)
    assert g.degrees() == [d + g2.n for d in g1.degrees()] + [d + g1.n for d in g2.degrees()]
    assert g.size() == g1.size() + g2.size() + g1.n * g2.n


@given(graphs(min_n=2, max_n=9))
def test_connectivity_against_networkx(g):
    kappa = vertex_connectivity(g)
    assert kappa == nx.node_connectivity(to_nx(g))
    if not g.is_complete():
        assert kappa <= g.min_degree()
    assert is_biconnected(g) == (g.n >= 3 and kappa >= 2)
    assert is_connected(g) == nx.is_connected(to_nx(g))


@pytest.mark.slow
def test_connectivity_matches_cut_enumeration_up_to_7():
    for g in all_graphs(7, n_min=2):
        assert vertex_connectivity(g) == brute_connectivity(g.adj, g.n), g
