import pytest
from hypothesis import assume, given, settings
from hypothesis import strategies as st

from bipcon.bigraph import (
    BipartiteGraph,
    add_left_vertex,
    add_right_vertex,
    degrees,
    new_graph,
)
from bipcon.connectivity import (
    brute_force_edge_connectivity,
    brute_force_vertex_connectivity,
    edge_connectivity,
    is_connected,
    vertex_connectivity,
)
from bipcon.constructions import CayleySubset, bi_cayley
from bipcon.errors import EmptyGraph, TooLarge, TooSmall

from conftest import graphs
from graphtools import components_count, delete_edges, delete_vertices


def complete(r, s):
    return new_graph(r, s, [(i, j) for i in range(1, r + 1) for j in range(1, s + 1)])


def test_is_connected_examples():
    assert is_connected(complete(2, 3))
    assert not is_connected(new_graph(2, 2, [(1, 1)]))
    assert is_connected(bi_cayley(CayleySubset(4, frozenset({0, 1}))))
    assert is_connected(BipartiteGraph(1, 0, (0,)))
    with pytest.raises(EmptyGraph):
        is_connected(BipartiteGraph(0, 0, ()))


def test_edge_connectivity_complete_23():
    res = edge_connectivity(complete(2, 3))
    assert res.value == 2 == brute_force_edge_connectivity(complete(2, 3))
    assert res.kind == "edge_cut" and len(res.edges) == 2


def test_edge_connectivity_disconnected_matching():
    res = edge_connectivity(new_graph(2, 2, [(1, 1), (2, 2)]))
    assert res.value == 0 and res.kind == "disconnected"


def test_edge_connectivity_eight_cycle():
    cycle = bi_cayley(CayleySubset(4, frozenset({0, 1})))
    assert edge_connectivity(cycle).value == 2 == brute_force_edge_connectivity(cycle)


def test_connectivity_rejects_tiny_graphs():
    single = BipartiteGraph(1, 0, (0,))
    with pytest.raises(TooSmall):
        edge_connectivity(single)
    with pytest.raises(TooSmall):
        vertex_connectivity(single)


def test_vertex_connectivity_complete_shapes():
    for r, s in ((1, 1), (2, 2), (2, 3), (3, 3)):
        g = complete(r, s)
        assert vertex_connectivity(g).value == r == brute_force_vertex_connectivity(g)


def test_vertex_connectivity_two_vertex_complete():
    res = vertex_connectivity(complete(1, 1))
    assert res.value == 1
    assert res.kind == "complete_side" and res.vertices == ("x1",)


def test_vertex_connectivity_path():
    g = new_graph(2, 2, [(1, 1), (2, 1), (2, 2)])
    res = vertex_connectivity(g)
    assert res.value == 1 == brute_force_vertex_connectivity(g)
    assert res.vertices in (("x2",), ("y1",))


def test_brute_force_examples():
    assert brute_force_edge_connectivity(complete(2, 2)) == 2
    assert brute_force_edge_connectivity(new_graph(1, 2, [])) == 0
    assert brute_force_edge_connectivity(complete(1, 3)) == 1
    assert brute_force_vertex_connectivity(complete(2, 3)) == 2
    assert brute_force_vertex_connectivity(new_graph(2, 2, [(1, 1)])) == 0
    assert brute_force_vertex_connectivity(complete(1, 1)) == 1


def test_brute_force_size_cap():
    with pytest.raises(TooLarge):
        brute_force_edge_connectivity(complete(5, 12))
    with pytest.raises(TooLarge):
        brute_force_vertex_connectivity(complete(5, 12))


def test_oracle_equivalence_exhaustive_small():
    # Every labeled graph on every shape with at most six vertices.
    shapes = [(r, s) for r in range(1, 4) for s in range(r, 7 - r)]
    for r, s in shapes:
        for mask in range(1 << (r * s)):
            g = BipartiteGraph.from_mask(r, s, mask)
            assert edge_connectivity(g).value == brute_force_edge_connectivity(g), (r, s, mask)
            assert vertex_connectivity(g).value == brute_force_vertex_connectivity(g), (r, s, mask)


@given(graphs())
def test_oracle_equivalence_random(g):
    assert edge_connectivity(g).value == brute_force_edge_connectivity(g)
    assert vertex_connectivity(g).value == brute_force_vertex_connectivity(g)


@given(graphs())
def test_whitney_chain(g):
    kv = vertex_connectivity(g).value
    kp = edge_connectivity(g).value
    assert kv <= kp <= degrees(g).min_degree


@given(graphs(), st.integers(0, 10 ** 6))
def test_edge_deletion_decreases_edge_connectivity_by_at_most_one(g, pick):
    assume(g.edge_count > 0)
    edges = g.edges()
    removed = edges[pick % len(edges)]
    smaller = delete_edges(g, [removed])
    assert edge_connectivity(smaller).value >= edge_connectivity(g).value - 1


@given(graphs(), st.randoms(use_true_random=False))
def test_vertex_addition_preserves_edge_connectivity(g, rng):
    assume(is_connected(g))
    k = edge_connectivity(g).value
    if rng.random() < 0.5:
        pool, attach = g.left_size, add_right_vertex
    else:
        pool, attach = g.right_size, add_left_vertex
    count = rng.randint(max(k, 1), pool)
    neighbors = sorted(rng.sample(range(1, pool + 1), count))
    assert edge_connectivity(attach(g, neighbors)).value >= k


@given(graphs())
@settings(max_examples=40)
def test_edge_cut_certificate_disconnects(g):
    res = edge_connectivity(g)
    if res.kind == "edge_cut":
        assert not is_connected(delete_edges(g, res.edges))
        assert len(res.edges) == res.value


@given(graphs())
@settings(max_examples=40)
def test_vertex_cut_certificate_separates(g):
    res = vertex_connectivity(g)
    if res.kind in ("vertex_cut", "complete_side"):
        remainder = delete_vertices(g, res.vertices)
        assert remainder.n <= 1 or components_count(remainder) >= 2
        assert len(res.vertices) == res.value


def test_certificates_on_complete_bipartite():
    res = vertex_connectivity(complete(2, 3))
    assert res.kind == "complete_side"
    assert set(res.vertices) == {"x1", "x2"}
