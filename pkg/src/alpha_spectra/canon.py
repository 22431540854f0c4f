"""Canonical labeling by partition refinement and individualization.

The canonical form of a graph is the relabeling that maximizes the packed
adjacency rows over all leaves of the search tree.  The tree is built only
from label-invariant choices (equitable refinement, first smallest
non-singleton target cell), so the maximum is an isomorphism invariant and
equal keys imply isomorphic graphs.  Twin vertices and automorphisms found
at equal leaves prune branches whose subtrees are images of explored ones.
"""
from __future__ import annotations

from collections import deque

from .graph import Graph, GraphError, _bits

# The search is exact at every order; the cap only bounds worst-case time on
# highly symmetric inputs.  All enumeration in this package stays at n <= 14.
MAX_CANONICAL_ORDER = 16

CanonicalKey = bytes


def _refine(rows: tuple[int, ...], cells: list[list[int]], queue: deque) -> list[list[int]]:
    n = len(rows)
    while queue and len(cells) < n:
        splitter = queue.popleft()
        out = []
        for cell in cells:
            if len(cell) == 1:
                out.append(cell)
                continue
            counts = [(rows[v] & splitter).bit_count() for v in cell]
            first = counts[0]
            if all(c == first for c in counts):
                out.append(cell)
                continue
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            for c in sorted(groups):
                frag = groups[c]
                out.append(frag)
                mask = 0
                for v in frag:
                    mask |= 1 << v
                queue.append(mask)
        cells = out
    return cells


def _certificate(rows: tuple[int, ...], order: list[int]) -> int:
    n = len(rows)
    pos = [0] * n
    for i, v in enumerate(order):
        pos[v] = i
    cert = 0
    for v in order:
        r = 0
        for w in _bits(rows[v]):
            r |= 1 << (n - 1 - pos[w])
        cert = (cert << n) | r
    return cert


def _orbit(v: int, gens: list[list[int]]) -> set[int]:
    orbit = {v}
    stack = [v]
    while stack:
        x = stack.pop()
        for g in gens:
            y = g[x]
            if y not in orbit:
                orbit.add(y)
                stack.append(y)
    return orbit


class _Search:
    def __init__(self, rows: tuple[int, ...]):
        self.rows = rows
        self.best_cert = -1
        self.best_order: list[int] | None = None
        self.autos: list[list[int]] = []

    def leaf(self, order: list[int]) -> None:
        cert = _certificate(self.rows, order)
        if cert > self.best_cert:
            self.best_cert = cert
            self.best_order = order
        elif cert == self.best_cert:
            # order[i] -> best_order[i] is an automorphism
            perm = [0] * len(order)
            for a, b in zip(order, self.best_order):
                perm[a] = b
            if any(perm[i] != i for i in range(len(perm))):
                self.autos.append(perm)

    def visit(self, cells: list[list[int]], queue: deque, prefix: list[int]) -> None:
        rows = self.rows
        cells = _refine(rows, cells, queue)
        if len(cells) == len(rows):
            self.leaf([c[0] for c in cells])
            return
        ti = min((i for i, c in enumerate(cells) if len(c) > 1), key=lambda i: len(cells[i]))
        target = cells[ti]
        explored: list[int] = []
        for v in target:
            bv = 1 << v
            if any((rows[v] & ~(1 << w)) == (rows[w] & ~bv) for w in explored):
                continue
            if explored and self.autos:
                gens = [g for g in self.autos if all(g[p] == p for p in prefix)]
                if gens and _orbit(v, gens) & set(explored):
                    continue
            explored.append(v)
            rest = [w for w in target if w != v]
            child = cells[:ti] + [[v], rest] + cells[ti + 1 :]
            self.visit(child, deque([bv]), prefix + [v])


def canonical_order(g: Graph) -> list[int]:
    """Vertex order such that ``g.relabel(order)`` is the canonical form."""
    if g.n > MAX_CANONICAL_ORDER:
        raise GraphError(f"canonical labeling supports n <= {MAX_CANONICAL_ORDER}, got {g.n}")
    search = _Search(g.rows)
    full = (1 << g.n) - 1
    search.visit([list(range(g.n))], deque([full]), [])
    return search.best_order


def canonical_form(g: Graph) -> Graph:
    return g.relabel(canonical_order(g))


def canonical_key(g: Graph) -> CanonicalKey:
    """Total-order key, equal for two graphs of the same order iff isomorphic."""
    order = canonical_order(g)
    cert = _certificate(g.rows, order)
    return bytes([g.n]) + cert.to_bytes((g.n * g.n + 7) // 8, "big")


def automorphism_orbits(g: Graph) -> list[list[int]]:
    """Vertex orbits of the automorphism group, each sorted, ordered by least vertex.

    Computed by individualizing each vertex and comparing the resulting
    canonical certificates, which is exact but quadratic in work.
    """
    keys = {}
    for v in range(g.n):
        search = _Search(g.rows)
        rest = [w for w in range(g.n) if w != v]
        cells = [[v], rest] if rest else [[v]]
        search.visit(cells, deque([1 << v, ((1 << g.n) - 1) ^ (1 << v)]), [v])
        keys.setdefault(search.best_cert, []).append(v)
    return sorted(keys.values())


def are_isomorphic(g: Graph, h: Graph) -> bool:
    return g.n == h.n and g.size == h.size and canonical_key(g) == canonical_key(h)
