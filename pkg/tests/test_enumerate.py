from __future__ import annotations

from itertools import combinations

import networkx as nx
import pytest

from alpha_spectra import enumerate as en
from alpha_spectra import families as fam
from alpha_spectra.canon import canonical_key
from alpha_spectra.graph import GraphError, from_edges, is_connected
from alpha_spectra.invariants import independence_number, is_bipartite, is_tree, is_triangle_free

# published sequence values (connected graphs, trees, triangle-free graphs,
# connected bipartite graphs), indexed by order from 1
CONNECTED = [1, 1, 2, 6, 21, 112, 853, 11117]
TREES = [1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551, 1301, 3159]
TRIANGLE_FREE = [1, 2, 3, 7, 14, 38, 107, 410, 1897, 12172]
BIPARTITE = [1, 1, 1, 3, 5, 17, 44, 182, 730]


def _labeled_classes(n: int, keep) -> set[bytes]:
    """Every labeled graph on n vertices, reduced to canonical keys."""
    pairs = list(combinations(range(n), 2))
    keys = set()
    for mask in range(1 << len(pairs)):
        g = from_edges(n, [p for i, p in enumerate(pairs) if mask >> i & 1])
        if keep(g):
            keys.add(canonical_key(g))
    return keys


def _keys(stream) -> list[bytes]:
    return [canonical_key(g) for g in stream]


@pytest.mark.parametrize("n", [1, 2, 3, 4, 5, 6])
def test_connected_matches_labeled_brute_force(n):
    keys = _keys(en.connected_graphs(n))
    assert len(keys) == len(set(keys))
    assert set(keys) == _labeled_classes(n, is_connected)


@pytest.mark.parametrize("n", range(1, 9))
def test_connected_counts(n):
    assert sum(1 for _ in en.connected_graphs(n)) == CONNECTED[n - 1]


@pytest.mark.parametrize("n", range(1, 15))
def test_tree_counts(n):
    ts = list(en.trees(n))
    assert len(ts) == TREES[n - 1]
    assert all(is_tree(t) for t in ts)
    if n <= 12:
        keys = _keys(ts)
        assert len(set(keys)) == len(keys)


@pytest.mark.parametrize("n", range(5, 10))
def test_trees_agree_with_networkx(n):
    ours = {canonical_key(t) for t in en.trees(n)}
    ref = {canonical_key(from_edges(n, t.edges())) for t in nx.nonisomorphic_trees(n)}
    assert ours == ref


@pytest.mark.parametrize("n", range(1, 11))
def test_triangle_free_counts(n):
    gs = list(en.triangle_free_graphs(n))
    assert len(gs) == TRIANGLE_FREE[n - 1]
    if n <= 8:
        assert all(is_triangle_free(g) for g in gs)


@pytest.mark.parametrize("n", range(1, 10))
def test_bipartite_counts(n):
    gs = list(en.connected_bipartite(n))
    assert len(gs) == BIPARTITE[n - 1]
    assert all(is_bipartite(g) and is_connected(g) for g in gs)


@pytest.mark.parametrize("n", [4, 6])
def test_bipartite_matches_filter(n):
    assert set(_keys(en.connected_bipartite(n))) == {canonical_key(g) for g in en.connected_graphs(n) if is_bipartite(g)}
    for i in range(1, n):
        assert canonical_key(fam.complete_bipartite(i, n - i)) in set(_keys(en.connected_bipartite(n)))


@pytest.mark.parametrize("n", range(3, 9))
def test_independence_two_matches_filter(n):
    ours = _keys(en.connected_independence_two(n))
    assert len(ours) == len(set(ours))
    ref = {canonical_key(g) for g in en.connected_graphs(n) if independence_number(g) == 2}
    assert set(ours) == ref


@pytest.mark.parametrize("n", range(3, 11))
def test_balanced_bridge_graph_is_in_the_independence_two_stream(n):
    target = canonical_key(fam.f_family((n + 1) // 2, n // 2))
    gs = list(en.connected_independence_two(n))
    assert target in {canonical_key(g) for g in gs}
    if n <= 9:
        assert all(independence_number(g) == 2 for g in gs)


def test_small_independence_two_contents():
    keys = set(_keys(en.connected_independence_two(4)))
    for g in (fam.path(4), fam.cycle(4)):
        assert canonical_key(g) in keys
    assert canonical_key(fam.complete(4)) not in keys


def test_streams_are_deterministic():
    a = [g.rows for g in en.connected_graphs(6)]
    en._level.cache_clear()
    b = [g.rows for g in en.connected_graphs(6)]
    assert a == b


@pytest.mark.parametrize("count", [2, 3, 5])
def test_shards_partition_the_stream(count):
    whole = _keys(en.connected_graphs(7))
    parts = [_keys(en.connected_graphs(7, shard=(i, count))) for i in range(count)]
    flat = [k for p in parts for k in p]
    assert sorted(flat) == sorted(whole)
    trees = [_keys(en.trees(9, shard=(i, count))) for i in range(count)]
    assert sorted(k for p in trees for k in p) == sorted(_keys(en.trees(9)))


def test_range_limits():
    with pytest.raises(GraphError):
        list(en.connected_graphs(10))
    with pytest.raises(GraphError):
        list(en.trees(15))
    with pytest.raises(GraphError):
        list(en.connected_bipartite(10))
    with pytest.raises(GraphError):
        list(en.connected_independence_two(13))
    with pytest.raises(GraphError):
        list(en.stream("cubic", 5))


def test_stream_dispatch():
    assert sum(1 for _ in en.stream("trees", 7)) == 11
    assert sum(1 for _ in en.stream("connected", 5)) == 21
    assert sum(1 for _ in en.stream("independence-two", 5)) == sum(
        1 for g in en.connected_graphs(5) if independence_number(g) == 2
    )
