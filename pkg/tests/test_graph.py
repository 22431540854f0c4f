from __future__ import annotations

import pytest
from hypothesis import given
from hypothesis import strategies as st

from alpha_spectra import families as fam
from alpha_spectra.canon import are_isomorphic
from alpha_spectra.graph import (
    Graph,
    GraphError,
    all_shift_moves,
    complement,
    components,
    disjoint_union,
    empty,
    from_edges,
    internal_path_edges,
    is_connected,
    join,
    shift_edges,
    subdivide_edge,
)
from helpers import connected_graphs, graphs


def test_from_edges_examples():
    p3 = from_edges(3, [(0, 1), (1, 2)])
    assert p3.edges() == [(0, 1), (1, 2)]
    assert from_edges(1, []).n == 1
    c4 = from_edges(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
    assert c4.degrees() == [2, 2, 2, 2] and c4.size == 4


def test_from_edges_collapses_repeats():
    assert from_edges(2, [(0, 1), (1, 0), (0, 1)]).size == 1


@pytest.mark.parametrize("edges", [[(0, 3)], [(-1, 0)], [(1, 1)]])
def test_from_edges_rejects_bad_pairs(edges):
    with pytest.raises(GraphError):
        from_edges(3, edges)


@pytest.mark.parametrize("n", [0, 65])
def test_order_cap(n):
    with pytest.raises(GraphError):
        from_edges(n, [])


def test_constructor_validates_rows():
    with pytest.raises(GraphError):
        Graph(2, (0b10, 0))  # asymmetric
    with pytest.raises(GraphError):
        Graph(2, (0b01, 0b01))  # loop
    with pytest.raises(GraphError):
        Graph(2, (0b100, 0))  # out of range


def test_complement_examples():
    assert complement(fam.complete(4)).size == 0
    assert are_isomorphic(complement(fam.cycle(5)), fam.cycle(5))
    k2_k3 = disjoint_union(fam.complete(2), fam.complete(3))
    assert are_isomorphic(complement(fam.complete_bipartite(2, 3)), k2_k3)


@given(graphs())
def test_complement_is_an_involution(g):
    assert complement(complement(g)) == g
    assert g.size + complement(g).size == g.n * (g.n - 1) // 2


def test_join_examples():
    assert are_isomorphic(join(fam.complete(1), empty(4)), fam.star(5))
    assert are_isomorphic(join(fam.complete(2), fam.complete(2)), fam.complete(4))
    assert are_isomorphic(join(empty(3), fam.complete(4)), fam.k_split(7, 3))


@given(graphs(max_n=6), graphs(max_n=6))
def test_join_edge_count_and_induced_parts(g, h):
    j = join(g, h)
    assert j.n == g.n + h.n
    assert j.size == g.size + h.size + g.n * h.n
    assert j.induced(range(g.n)) == g
    assert j.induced(range(g.n, g.n + h.n)) == h


def test_join_order_cap():
    with pytest.raises(GraphError):
        join(empty(40), empty(30))


def test_subdivide_examples():
    p3 = fam.path(3)
    assert are_isomorphic(subdivide_edge(p3, 0, 1), fam.path(4))
    assert are_isomorphic(subdivide_edge(fam.cycle(4), 2, 3), fam.cycle(5))
    with pytest.raises(GraphError):
        subdivide_edge(p3, 0, 2)


def test_subdividing_the_central_edge_of_g1_contains_g2():
    # G1(s,t) with v1v2 subdivided, minus one pendant of v1, is G2(s-1,t).
    s, t = 3, 2
    g = subdivide_edge(fam.g_family(1, s, t), 0, 1)
    pendant = 2  # first pendant of v1
    assert are_isomorphic(g.delete_vertex(pendant), fam.g_family(2, s - 1, t))


@given(graphs(min_n=2), st.data())
def test_subdivide_counts(g, data):
    if not g.size:
        return
    u, v = data.draw(st.sampled_from(g.edges()))
    h = subdivide_edge(g, u, v)
    assert (h.n, h.size) == (g.n + 1, g.size + 1)
    assert h.neighbors(g.n) == [u, v]
    assert not h.has_edge(u, v)


def test_shift_edges_examples():
    p4 = fam.path(4)
    assert are_isomorphic(shift_edges(p4, 1, 2, [0]), fam.star(4))
    # G2(1,2) -> G2(2,1) by moving one pendant of v2 over to v1
    g = fam.g_family(2, 1, 2)
    moved = shift_edges(g, 1, 0, [5])
    assert are_isomorphic(moved, fam.g_family(2, 2, 1))
    k13 = fam.star(4)
    assert are_isomorphic(shift_edges(k13, 0, 1, [2]), fam.path(4))


def test_shift_edges_rejects_bad_sets():
    p4 = fam.path(4)
    with pytest.raises(GraphError):
        shift_edges(p4, 1, 2, [])
    with pytest.raises(GraphError):
        shift_edges(p4, 1, 2, [2])  # u itself
    with pytest.raises(GraphError):
        shift_edges(fam.cycle(4), 0, 2, [1])  # 1 is already adjacent to u
    with pytest.raises(GraphError):
        shift_edges(p4, 1, 1, [0])


@given(graphs(min_n=3, max_n=8), st.data())
def test_shift_edges_preserves_counts(g, data):
    moves = list(all_shift_moves(g, max_set=3))
    if not moves:
        return
    v, u, s = data.draw(st.sampled_from(moves))
    h = shift_edges(g, v, u, s)
    assert (h.n, h.size) == (g.n, g.size)
    for w in s:
        assert h.has_edge(u, w) and not h.has_edge(v, w)


def test_connectivity_examples():
    assert is_connected(fam.path(5))
    assert not is_connected(from_edges(4, [(0, 1), (2, 3)]))
    assert is_connected(from_edges(1, []))


@given(graphs())
def test_components_partition_the_vertices(g):
    comps = components(g)
    total = 0
    for c in comps:
        assert total & c == 0
        total |= c
    assert total == (1 << g.n) - 1
    assert (len(comps) == 1) == is_connected(g)


def test_internal_path_edges():
    assert internal_path_edges(fam.t_shape(1, 1, 4)) == []
    ds = fam.double_snake(8)
    # the spine 0 - 2 - 3 - 1 is the only internal path
    assert internal_path_edges(ds) == [(0, 2), (1, 3), (2, 3)]
    assert internal_path_edges(fam.double_snake(6)) == [(0, 1)]


@given(connected_graphs(max_n=7))
def test_internal_path_edges_have_major_ends_or_degree_two(g):
    deg = g.degrees()
    for u, v in internal_path_edges(g):
        assert deg[u] >= 2 and deg[v] >= 2
