"""Isomorph-free generation of small graph classes.

Hereditary classes (all graphs, triangle-free graphs, bipartite graphs) grow
one vertex at a time.  A child ``C = P + v`` is kept only when ``v`` is a
canonical deletion vertex of ``C``: it maximizes the invariant
``(degree, sorted neighbour degrees)`` and, among the tied vertices ``w``,
``C - w`` has no smaller canonical key than ``P``.  This makes the parent of
every output unique up to isomorphism, so duplicates can only come from one
parent and a per-parent key set removes them.

Trees are grown by attaching leaves and deduplicated with a rooted-tree
encoding at the centre.
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations
from typing import Iterator

from .canon import canonical_key
from .graph import Graph, GraphError, _bits, complement, is_connected
from .invariants import is_bipartite

MAX_CONNECTED = 9
MAX_LONG_RUN = 10
MAX_TREES = 14
MAX_BIPARTITE = 9
MAX_TRIANGLE_FREE = 12

CLASSES = ("connected", "trees", "bipartite", "independence-two")


def _subsets_at_least(n: int, lo: int, rows: tuple[int, ...]) -> Iterator[int]:
    for k in range(max(lo, 0), n + 1):
        for combo in combinations(range(n), k):
            m = 0
            for v in combo:
                m |= 1 << v
            yield m


def _independent_sets_at_least(n: int, lo: int, rows: tuple[int, ...]) -> Iterator[int]:
    """Independent vertex sets of size >= lo, by include/exclude branching."""

    def rec(cand: int, chosen: int, size: int) -> Iterator[int]:
        if size + cand.bit_count() < lo:
            return
        if not cand:
            yield chosen
            return
        low = cand & -cand
        v = low.bit_length() - 1
        yield from rec(cand & ~low & ~rows[v], chosen | low, size + 1)
        yield from rec(cand & ~low, chosen, size)

    yield from rec((1 << n) - 1, 0, 0)


def _child(p: Graph, s: int) -> Graph:
    v = p.n
    rows = [r | (1 << v) if s >> u & 1 else r for u, r in enumerate(p.rows)]
    rows.append(s)
    return Graph._trusted(v + 1, rows)


def _invariant(rows: list[int] | tuple[int, ...], deg: list[int], w: int) -> tuple:
    return (deg[w], sorted(deg[x] for x in _bits(rows[w])))


def _children(p: Graph, key_p: bytes, kind: str) -> list[tuple[bytes, Graph]]:
    n = p.n
    deg_p = p.degrees()
    top = max(deg_p) if n else 0
    if kind == "triangle-free":
        sets = _independent_sets_at_least(n, top, p.rows)
    else:
        sets = _subsets_at_least(n, top, p.rows)
    seen: set[bytes] = set()
    out = []
    for s in sets:
        d = s.bit_count()
        if any(deg_p[w] + (s >> w & 1) > d for w in range(n)):
            continue
        c = _child(p, s)
        if kind == "bipartite" and not is_bipartite(c):
            continue
        deg = [x + (s >> w & 1) for w, x in enumerate(deg_p)] + [d]
        fv = _invariant(c.rows, deg, n)
        tied = []
        reject = False
        for w in range(n):
            if deg[w] != d:
                continue
            fw = _invariant(c.rows, deg, w)
            if fw > fv:
                reject = True
                break
            if fw == fv:
                tied.append(w)
        if reject:
            continue
        if any(canonical_key(c.delete_vertex(w)) < key_p for w in tied):
            continue
        kc = canonical_key(c)
        if kc in seen:
            continue
        seen.add(kc)
        out.append((kc, c))
    out.sort(key=lambda item: item[0])
    return out


@lru_cache(maxsize=None)
def _level(kind: str, n: int) -> tuple[tuple[bytes, Graph], ...]:
    """All graphs of order ``n`` in a hereditary class, key-ascending."""
    if n == 1:
        g = Graph._trusted(1, (0,))
        return ((canonical_key(g), g),)
    out = []
    for key_p, p in _level(kind, n - 1):
        out.extend(_children(p, key_p, kind))
    out.sort(key=lambda item: item[0])
    return tuple(out)


def _stream(kind: str, n: int, shard: tuple[int, int] | None) -> Iterator[Graph]:
    """Final level streamed parent by parent so it is never held in memory."""
    if n == 1:
        if shard is None or shard[0] == 0:
            yield _level(kind, 1)[0][1]
        return
    index, count = shard if shard is not None else (0, 1)
    for i, (key_p, p) in enumerate(_level(kind, n - 1)):
        if i % count != index:
            continue
        for _, c in _children(p, key_p, kind):
            yield c


def _check_range(n: int, hi: int, what: str) -> None:
    if not 1 <= n <= hi:
        raise GraphError(f"{what} supports 1 <= n <= {hi}, got {n}")


def all_graphs(n: int, shard: tuple[int, int] | None = None, long_run: bool = False) -> Iterator[Graph]:
    _check_range(n, MAX_LONG_RUN if long_run else MAX_CONNECTED, "graph enumeration")
    return _stream("all", n, shard)


def connected_graphs(n: int, shard: tuple[int, int] | None = None, long_run: bool = False) -> Iterator[Graph]:
    """One graph per isomorphism class of connected graphs on ``n`` vertices.

    ``n = 10`` (about 11.7 million classes) needs ``long_run=True``.
    """
    _check_range(n, MAX_LONG_RUN if long_run else MAX_CONNECTED, "connected_graphs")
    return (g for g in _stream("all", n, shard) if is_connected(g))


def triangle_free_graphs(n: int, shard: tuple[int, int] | None = None) -> Iterator[Graph]:
    _check_range(n, MAX_TRIANGLE_FREE, "triangle_free_graphs")
    return _stream("triangle-free", n, shard)


def connected_independence_two(n: int, shard: tuple[int, int] | None = None) -> Iterator[Graph]:
    """Connected graphs with independence number 2, as complements of
    triangle-free graphs with at least one edge."""
    _check_range(n, MAX_TRIANGLE_FREE, "connected_independence_two")
    for h in _stream("triangle-free", n, shard):
        if any(h.rows):
            g = complement(h)
            if is_connected(g):
                yield g


def connected_bipartite(n: int, shard: tuple[int, int] | None = None) -> Iterator[Graph]:
    _check_range(n, MAX_BIPARTITE, "connected_bipartite")
    return (g for g in _stream("bipartite", n, shard) if is_connected(g))


# -- trees ------------------------------------------------------------------------

def _rooted_code(rows: tuple[int, ...], root: int, parent: int) -> str:
    kids = sorted(_rooted_code(rows, w, root) for w in _bits(rows[root]) if w != parent)
    return "(" + "".join(kids) + ")"


def tree_centres(t: Graph) -> list[int]:
    deg = t.degrees()
    remaining = t.n
    layer = [v for v in range(t.n) if deg[v] <= 1]
    removed = set()
    while remaining > 2:
        remaining -= len(layer)
        nxt = []
        for v in layer:
            removed.add(v)
            for w in _bits(t.rows[v]):
                if w not in removed:
                    deg[w] -= 1
                    if deg[w] == 1:
                        nxt.append(w)
        layer = nxt
    return [v for v in range(t.n) if v not in removed]


def tree_key(t: Graph) -> str:
    """Isomorphism-complete encoding of a tree (rooted at its centre, or the
    centre edge for bicentral trees)."""
    centres = tree_centres(t)
    if len(centres) == 1:
        return _rooted_code(t.rows, centres[0], -1)
    a, b = centres
    ca = _rooted_code(t.rows, a, b)
    cb = _rooted_code(t.rows, b, a)
    return "E" + min(ca, cb) + max(ca, cb)


@lru_cache(maxsize=None)
def _tree_level(n: int) -> tuple[Graph, ...]:
    if n == 1:
        return (Graph._trusted(1, (0,)),)
    found: dict[str, Graph] = {}
    for p in _tree_level(n - 1):
        for u in range(p.n):
            c = _child(p, 1 << u)
            found.setdefault(tree_key(c), c)
    graphs = list(found.values())
    if n <= 16:
        graphs.sort(key=canonical_key)
    return tuple(graphs)


def trees(n: int, shard: tuple[int, int] | None = None) -> Iterator[Graph]:
    _check_range(n, MAX_TREES, "trees")
    index, count = shard if shard is not None else (0, 1)
    for i, t in enumerate(_tree_level(n)):
        if i % count == index:
            yield t


def stream(cls: str, n: int, shard: tuple[int, int] | None = None, long_run: bool = False) -> Iterator[Graph]:
    """Dispatch by class name: ``connected``, ``trees``, ``bipartite`` or
    ``independence-two``."""
    if cls in ("connected", "all"):
        return connected_graphs(n, shard, long_run)
    if cls == "trees":
        return trees(n, shard)
    if cls == "bipartite":
        return connected_bipartite(n, shard)
    if cls == "independence-two":
        return connected_independence_two(n, shard)
    raise GraphError(f"unknown class {cls!r}; expected one of {', '.join(CLASSES)}")
