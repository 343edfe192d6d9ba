"""
Test script to check graph representation and surgery
"""

import random

import networkx as nx
import pytest

from constructions import turan_graph
from graphs import (
    EdgeError,
    Graph,
    VertexSet,
    add_edges,
    complete_graph,
    degree_sequence,
    delete_edges,
    edgeless_graph,
    graph_odd_girth,
    is_regular,
)


def cycle(n):
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def test_degree_sequences():
    assert degree_sequence(edgeless_graph(4)) == [0, 0, 0, 0]
    assert degree_sequence(cycle(5)) == [2] * 5
    assert degree_sequence(turan_graph(6, 3)) == [4] * 6


def test_regularity():
    assert is_regular(cycle(7)) == 2
    assert is_regular(Graph.from_edges(3, [(0, 1), (1, 2)])) is None
    assert is_regular(turan_graph(7, 3)) is None
    assert is_regular(complete_graph(1)) == 0
    with pytest.raises(ValueError):
        is_regular(edgeless_graph(0))


def test_delete_one_edge_of_k4():
    g = delete_edges(complete_graph(4), [(0, 1)])
    assert g.edge_count == 5
    assert sorted(degree_sequence(g)) == [2, 2, 3, 3]
    assert not g.has_edge(1, 0)


def test_delete_perfect_matching_of_k33():
    k33 = turan_graph(6, 2)
    g = delete_edges(k33, [(0, 3), (1, 4), (2, 5)])
    assert is_regular(g) == 2
    assert g.edge_count == 6


def test_delete_hamiltonian_cycle_of_k222():
    k222 = turan_graph(6, 3)
    tour = [0, 2, 4, 1, 3, 5]
    g = delete_edges(k222, [(tour[i], tour[(i + 1) % 6]) for i in range(6)])
    assert is_regular(g) == 2
    assert g.edge_count == 6


def test_delete_rejects_bad_edges():
    k4 = complete_graph(4)
    with pytest.raises(EdgeError):
        delete_edges(delete_edges(k4, [(0, 1)]), [(0, 1)])
    with pytest.raises(EdgeError):
        delete_edges(k4, [(0, 1), (1, 0)])
    with pytest.raises(EdgeError):
        delete_edges(k4, [(2, 2)])
    with pytest.raises(EdgeError):
        delete_edges(k4, [(0, 4)])


def test_add_edges_inverts_delete():
    k5 = complete_graph(5)
    removed = [(0, 1), (2, 3), (1, 4)]
    assert add_edges(delete_edges(k5, removed), removed) == k5
    with pytest.raises(EdgeError):
        add_edges(k5, [(0, 1)])


def test_constructor_validation():
    with pytest.raises(ValueError):
        Graph(2, [0b10, 0b00])
    with pytest.raises(ValueError):
        Graph(2, [0b01, 0b00])
    with pytest.raises(ValueError):
        Graph(2, [0b100, 0b000])
    with pytest.raises(EdgeError):
        Graph.from_edges(3, [(1, 1)])


def test_vertex_set():
    vs = VertexSet(6, (4, 1, 3))
    assert list(vs) == [4, 1, 3]
    assert vs[-1] == 3
    assert vs[:2] == (4, 1)
    assert vs.mask == 0b11010
    with pytest.raises(ValueError):
        VertexSet(6, (1, 1))
    with pytest.raises(ValueError):
        VertexSet(3, (3,))


def test_handshake_and_networkx_agreement():
    rng = random.Random(7)
    for _ in range(200):
        n = rng.randint(1, 14)
        nx_graph = nx.gnp_random_graph(n, rng.random(), seed=rng.randint(0, 10 ** 6))
        g = Graph.from_networkx(nx_graph)
        assert sum(degree_sequence(g)) == 2 * g.edge_count
        assert g.edge_count == nx_graph.number_of_edges()
        assert set(g.to_networkx().edges()) == {tuple(sorted(e)) for e in nx_graph.edges()}
        degrees = {d for _, d in nx_graph.degree()}
        assert is_regular(g) == (degrees.pop() if len(degrees) == 1 else None)


def test_from_networkx_numbers_vertices_in_node_order():
    labelled = nx.relabel_nodes(nx.path_graph(4), {0: "a", 1: "b", 2: "c", 3: "d"})
    g = Graph.from_networkx(labelled)
    assert g.n == 4
    assert set(g.edges()) == {(0, 1), (1, 2), (2, 3)}
    assert Graph.from_networkx(turan_graph(7, 3).to_networkx()) == turan_graph(7, 3)


def test_odd_girth():
    assert graph_odd_girth(cycle(5)) == 5
    assert graph_odd_girth(cycle(7)) == 7
    assert graph_odd_girth(complete_graph(4)) == 3
    assert graph_odd_girth(turan_graph(6, 2)) is None
    assert graph_odd_girth(Graph.from_networkx(nx.petersen_graph())) == 5


if __name__ == "__main__":
    raise SystemExit(pytest.main([__file__, "-v"]))
