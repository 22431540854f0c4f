"""Immutable simple graphs stored as adjacency bit rows.

Vertex ``u`` is adjacent to ``v`` iff bit ``v`` of ``rows[u]`` is set.  All
operations return new graphs; nothing here mutates an existing value.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import combinations
from typing import Iterable, Iterator

MAX_ORDER = 64


class GraphError(ValueError):
    """Raised for malformed graph input or violated surgery preconditions."""


def _bits(mask: int) -> Iterator[int]:
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


@dataclass(frozen=True, slots=True)
class Graph:
    n: int
    rows: tuple[int, ...]

    def __post_init__(self) -> None:
        if not 1 <= self.n <= MAX_ORDER:
            raise GraphError(f"order must be in 1..{MAX_ORDER}, got {self.n}")
        if len(self.rows) != self.n:
            raise GraphError("need exactly one adjacency row per vertex")
        full = (1 << self.n) - 1
        for u, row in enumerate(self.rows):
            if row & ~full:
                raise GraphError(f"row {u} has bits beyond vertex {self.n - 1}")
            if row >> u & 1:
                raise GraphError(f"loop at vertex {u}")
            for v in _bits(row):
                if not self.rows[v] >> u & 1:
                    raise GraphError(f"asymmetric adjacency between {u} and {v}")

    @classmethod
    def _trusted(cls, n: int, rows: Iterable[int]) -> "Graph":
        # Skips validation; callers guarantee a symmetric loopless row set.
        g = object.__new__(cls)
        object.__setattr__(g, "n", n)
        object.__setattr__(g, "rows", tuple(rows))
        return g

    # -- structural queries -------------------------------------------------
    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.rows[u] >> v & 1)

    def degree(self, u: int) -> int:
        return self.rows[u].bit_count()

    def degrees(self) -> list[int]:
        return [r.bit_count() for r in self.rows]

    def max_degree(self) -> int:
        return max(self.degrees())

    def neighbors(self, u: int) -> list[int]:
        return list(_bits(self.rows[u]))

    def edges(self) -> list[tuple[int, int]]:
        return [(u, v) for u in range(self.n) for v in _bits(self.rows[u] >> (u + 1) << (u + 1))]

    @property
    def size(self) -> int:
        return sum(r.bit_count() for r in self.rows) // 2

    def adjacency(self) -> list[list[int]]:
        return [[row >> v & 1 for v in range(self.n)] for row in self.rows]

    def relabel(self, order: list[int]) -> "Graph":
        """Graph whose vertex ``i`` is vertex ``order[i]`` of this graph."""
        pos = [0] * self.n
        for i, v in enumerate(order):
            pos[v] = i
        rows = []
        for v in order:
            r = 0
            for w in _bits(self.rows[v]):
                r |= 1 << pos[w]
            rows.append(r)
        return Graph._trusted(self.n, rows)

    def delete_vertex(self, w: int) -> "Graph":
        if self.n == 1:
            raise GraphError("cannot delete the only vertex")
        low = (1 << w) - 1
        rows = []
        for u, r in enumerate(self.rows):
            if u != w:
                rows.append((r & low) | (r >> (w + 1) << w))
        return Graph._trusted(self.n - 1, rows)

    def induced(self, vertices: Iterable[int]) -> "Graph":
        keep = sorted(set(vertices))
        chosen = set(keep)
        return self.relabel(keep + [v for v in range(self.n) if v not in chosen]).prefix(len(keep))

    def prefix(self, k: int) -> "Graph":
        mask = (1 << k) - 1
        return Graph._trusted(k, [r & mask for r in self.rows[:k]])

    def add_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        return from_edges(self.n, self.edges() + list(edges))

    def remove_edges(self, edges: Iterable[tuple[int, int]]) -> "Graph":
        rows = list(self.rows)
        for u, v in edges:
            if not rows[u] >> v & 1:
                raise GraphError(f"{u}{v} is not an edge")
            rows[u] &= ~(1 << v)
            rows[v] &= ~(1 << u)
        return Graph._trusted(self.n, rows)

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, edges={self.edges()})"


def from_edges(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on vertices ``0..n-1``; repeated edges collapse to one."""
    if not 1 <= n <= MAX_ORDER:
        raise GraphError(f"order must be in 1..{MAX_ORDER}, got {n}")
    rows = [0] * n
    for u, v in edges:
        if not (0 <= u < n and 0 <= v < n):
            raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
        if u == v:
            raise GraphError(f"loop edge at {u}")
        rows[u] |= 1 << v
        rows[v] |= 1 << u
    return Graph._trusted(n, rows)


def empty(n: int) -> Graph:
    return from_edges(n, [])


def complement(g: Graph) -> Graph:
    full = (1 << g.n) - 1
    return Graph._trusted(g.n, [full & ~r & ~(1 << u) for u, r in enumerate(g.rows)])


def disjoint_union(g: Graph, h: Graph) -> Graph:
    if g.n + h.n > MAX_ORDER:
        raise GraphError(f"combined order {g.n + h.n} exceeds {MAX_ORDER}")
    return Graph._trusted(g.n + h.n, list(g.rows) + [r << g.n for r in h.rows])


def join(g: Graph, h: Graph) -> Graph:
    """All edges of ``g`` and ``h`` plus every cross pair; ``h`` is shifted by ``g.n``."""
    if g.n + h.n > MAX_ORDER:
        raise GraphError(f"combined order {g.n + h.n} exceeds {MAX_ORDER}")
    g_all = (1 << g.n) - 1
    h_all = ((1 << h.n) - 1) << g.n
    rows = [r | h_all for r in g.rows] + [(r << g.n) | g_all for r in h.rows]
    return Graph._trusted(g.n + h.n, rows)


def subdivide_edge(g: Graph, u: int, v: int) -> Graph:
    """Replace edge ``uv`` by a path ``u w v``; the new vertex ``w`` is ``g.n``."""
    if not (0 <= u < g.n and 0 <= v < g.n) or not g.has_edge(u, v):
        raise GraphError(f"({u}, {v}) is not an edge")
    if g.n + 1 > MAX_ORDER:
        raise GraphError("subdivision would exceed the order cap")
    w = g.n
    rows = list(g.rows)
    rows[u] = (rows[u] & ~(1 << v)) | (1 << w)
    rows[v] = (rows[v] & ~(1 << u)) | (1 << w)
    rows.append((1 << u) | (1 << v))
    return Graph._trusted(g.n + 1, rows)


def shift_edges(g: Graph, v: int, u: int, s: Iterable[int]) -> Graph:
    """Move the edges ``vw`` (``w`` in ``s``) over to ``uw``.

    ``s`` must be a nonempty subset of ``N(v)`` avoiding ``u`` and ``N(u)``.
    """
    s = set(s)
    if not s:
        raise GraphError("shift set must be nonempty")
    if u == v:
        raise GraphError("u and v must differ")
    allowed = g.rows[v] & ~g.rows[u] & ~(1 << u)
    rows = list(g.rows)
    for w in s:
        if not allowed >> w & 1:
            raise GraphError(f"vertex {w} is not in N(v) minus N[u]")
        rows[v] &= ~(1 << w)
        rows[w] = (rows[w] & ~(1 << v)) | (1 << u)
        rows[u] |= 1 << w
    return Graph._trusted(g.n, rows)


def components(g: Graph) -> list[int]:
    """Vertex masks of the connected components, in order of least vertex."""
    seen = 0
    comps = []
    full = (1 << g.n) - 1
    while seen != full:
        start = ~seen & full
        start &= -start
        comp = frontier = start
        while frontier:
            nxt = 0
            for w in _bits(frontier):
                nxt |= g.rows[w]
            frontier = nxt & ~comp
            comp |= frontier
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    comp = frontier = 1
    while frontier:
        nxt = 0
        for w in _bits(frontier):
            nxt |= g.rows[w]
        frontier = nxt & ~comp
        comp |= frontier
    return comp == (1 << g.n) - 1


def internal_path_edges(g: Graph) -> list[tuple[int, int]]:
    """Edges lying on some internal path (major ends, degree-2 interior)."""
    deg = g.degrees()
    found = set()
    for start in range(g.n):
        if deg[start] < 3:
            continue
        for first in _bits(g.rows[start]):
            path = [start, first]
            prev, cur = start, first
            while deg[cur] == 2 and cur != start:
                nxt = next(w for w in _bits(g.rows[cur]) if w != prev)
                prev, cur = cur, nxt
                path.append(cur)
            if deg[cur] >= 3 and cur != start and len(set(path)) == len(path):
                for a, b in zip(path, path[1:]):
                    found.add((min(a, b), max(a, b)))
    return sorted(found)


def all_shift_moves(g: Graph, max_set: int | None = None) -> Iterator[tuple[int, int, tuple[int, ...]]]:
    """Every legal ``(v, u, S)`` for :func:`shift_edges`."""
    for v in range(g.n):
        for u in range(g.n):
            if u == v:
                continue
            allowed = list(_bits(g.rows[v] & ~g.rows[u] & ~(1 << u)))
            top = len(allowed) if max_set is None else min(max_set, len(allowed))
            for k in range(1, top + 1):
                for s in combinations(allowed, k):
                    yield v, u, s
