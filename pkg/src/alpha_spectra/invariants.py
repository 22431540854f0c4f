"""Exact combinatorial invariants on bit-row graphs."""
from __future__ import annotations

from functools import lru_cache

from .graph import Graph, GraphError, _bits, is_connected

MAX_MATCHING_ORDER = 14


def _max_clique(rows: list[int], cand: int) -> int:
    """Size of a maximum clique inside ``cand``; greedy coloring gives the bound."""
    best = 0

    def color_order(p: int) -> list[tuple[int, int]]:
        # (vertex, color) in nondecreasing color order
        out = []
        color = 0
        uncolored = p
        while uncolored:
            color += 1
            avail = uncolored
            while avail:
                low = avail & -avail
                v = low.bit_length() - 1
                avail &= ~rows[v] & ~low
                uncolored &= ~low
                out.append((v, color))
        return out

    def expand(size: int, p: int) -> None:
        nonlocal best
        order = color_order(p)
        for v, color in reversed(order):
            if size + color <= best:
                return
            q = p & rows[v]
            if q:
                expand(size + 1, q)
            elif size + 1 > best:
                best = size + 1
            p &= ~(1 << v)

    if cand:
        expand(0, cand)
    return best


def independence_number(g: Graph) -> int:
    full = (1 << g.n) - 1
    comp = [full & ~r & ~(1 << u) for u, r in enumerate(g.rows)]
    return _max_clique(comp, full)


def clique_number(g: Graph) -> int:
    return _max_clique(list(g.rows), (1 << g.n) - 1)


def independence_number_bruteforce(g: Graph) -> int:
    """Subset enumeration; only for cross-checking on small graphs."""
    best = 0
    for mask in range(1 << g.n):
        k = mask.bit_count()
        if k <= best:
            continue
        if all(not (g.rows[v] & mask) for v in _bits(mask)):
            best = k
    return best


def matching_number(g: Graph) -> int:
    """Maximum matching size by branching on the lowest unmatched vertex."""
    if g.n > MAX_MATCHING_ORDER:
        raise GraphError(f"matching_number supports n <= {MAX_MATCHING_ORDER}, got {g.n}")
    rows = g.rows

    @lru_cache(maxsize=None)
    def solve(free: int) -> int:
        # drop vertices with no free neighbour; they can never be matched
        live = free
        for v in _bits(free):
            if not rows[v] & free:
                live &= ~(1 << v)
        if not live:
            return 0
        low = live & -live
        v = low.bit_length() - 1
        best = solve(live & ~low)
        if best * 2 + 2 > live.bit_count():
            return best
        for w in _bits(rows[v] & live):
            cand = 1 + solve(live & ~low & ~(1 << w))
            if cand > best:
                best = cand
                if best * 2 >= live.bit_count() - 1:
                    break
        return best

    return solve((1 << g.n) - 1)


def is_bipartite(g: Graph) -> bool:
    color = [-1] * g.n
    for s in range(g.n):
        if color[s] >= 0:
            continue
        color[s] = 0
        stack = [s]
        while stack:
            u = stack.pop()
            for w in _bits(g.rows[u]):
                if color[w] < 0:
                    color[w] = 1 - color[u]
                    stack.append(w)
                elif color[w] == color[u]:
                    return False
    return True


def is_tree(g: Graph) -> bool:
    return g.size == g.n - 1 and is_connected(g)


def is_triangle_free(g: Graph) -> bool:
    return all(not (g.rows[u] & g.rows[v]) for u, v in g.edges())
