"""Constructors for the named graph families.

Vertex numbering is fixed per constructor and documented there, so tests can
address specific vertices (centres, bridge ends, subdivision vertices).
Every constructor checks the order and independence number it promises.
"""
from __future__ import annotations

import re
from dataclasses import dataclass

from .graph import Graph, GraphError, complement, empty, from_edges, join
from .invariants import independence_number

KINDS = {
    "path": 1,
    "cycle": 1,
    "complete": 1,
    "complete_bipartite": 2,
    "star": 1,
    "tshape": 3,
    "doublesnake": 1,
    "g1": 2,
    "g2": 2,
    "h1": 3,
    "h2": 3,
    "h3": 3,
    "h4": 3,
    "f": 2,
    "sstar": 2,
    "ksplit": 2,
    "empty": 1,
}
ALIASES = {
    "t_shape": "tshape",
    "double_snake": "doublesnake",
    "s_star": "sstar",
    "k_split": "ksplit",
    "kbip": "complete_bipartite",
}


def _require(cond: bool, msg: str) -> None:
    if not cond:
        raise GraphError(msg)


def _assert_alpha(g: Graph, expected: int, what: str) -> Graph:
    got = independence_number(g)
    if got != expected:
        raise AssertionError(f"{what}: independence number {got}, expected {expected}")
    return g


def _pendants(start: int, centre: int, count: int) -> list[tuple[int, int]]:
    return [(centre, start + i) for i in range(count)]


# -- basic families -------------------------------------------------------------

def path(n: int) -> Graph:
    _require(n >= 1, "path needs n >= 1")
    return from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _require(n >= 3, "cycle needs n >= 3")
    return from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _require(n >= 1, "complete graph needs n >= 1")
    return from_edges(n, [(u, v) for u in range(n) for v in range(u + 1, n)])


def complete_bipartite(a: int, b: int) -> Graph:
    """Parts ``0..a-1`` and ``a..a+b-1``."""
    _require(a >= 1 and b >= 1, "complete bipartite needs a, b >= 1")
    return join(empty(a), empty(b))


def star(n: int) -> Graph:
    """K(1, n-1) with centre 0."""
    _require(n >= 2, "star needs n >= 2")
    return complete_bipartite(1, n - 1)


def t_shape(a: int, b: int, c: int) -> Graph:
    """Spider with centre 0 and legs of ``a``, ``b``, ``c`` vertices, legs
    numbered consecutively outward."""
    _require(1 <= a <= b <= c, "T-shape needs 1 <= a <= b <= c")
    edges = []
    nxt = 1
    for leg in (a, b, c):
        prev = 0
        for _ in range(leg):
            edges.append((prev, nxt))
            prev = nxt
            nxt += 1
    return from_edges(nxt, edges)


def double_snake(n: int) -> Graph:
    """Major vertices 0 and 1 joined through the path ``2..n-5``; leaves
    ``n-4, n-3`` hang on 0 and ``n-2, n-1`` on 1."""
    _require(n >= 6, "double snake needs n >= 6")
    spine = [0] + list(range(2, n - 4)) + [1]
    edges = list(zip(spine, spine[1:]))
    edges += [(0, n - 4), (0, n - 3), (1, n - 2), (1, n - 1)]
    return from_edges(n, edges)


# -- families with prescribed independence number ------------------------------

def g_family(variant: int, s: int, t: int) -> Graph:
    """G1(s, t) and G2(s, t).

    ``v1 = 0`` and ``v2 = 1`` carry ``s`` and ``t`` pendants.  In G2 the edge
    ``v1 v2`` is subdivided by vertex 2; pendants follow from index 3.
    """
    if variant == 1:
        _require(min(s, t) >= 1, "G1 needs min(s, t) >= 1")
        edges = [(0, 1)] + _pendants(2, 0, s) + _pendants(2 + s, 1, t)
        g = from_edges(s + t + 2, edges)
    elif variant == 2:
        _require(s >= 0 and t >= 0 and max(s, t) >= 1, "G2 needs max(s, t) >= 1")
        edges = [(0, 2), (2, 1)] + _pendants(3, 0, s) + _pendants(3 + s, 1, t)
        g = from_edges(s + t + 3, edges)
    else:
        raise GraphError("g_family variant must be 1 or 2")
    return _assert_alpha(g, g.n - 2, f"G{variant}({s},{t})")


def h_family(variant: int, s: int, t: int, k: int) -> Graph:
    """H1..H4 with ``v1, v2, v3 = 0, 1, 2`` carrying ``s, t, k`` pendants.

    ``v4 = 3`` subdivides ``v1 v2`` (H2, H3, H4) and ``v5 = 4`` subdivides
    ``v2 v3`` (H3).  H4 is H2 with ``v2 v3`` replaced by ``v3 v4``.  Pendants
    of ``v1``, ``v2``, ``v3`` follow the structural vertices in that order.
    """
    _require(min(s, t, k) >= 0, "pendant counts must be nonnegative")
    if variant == 1:
        _require(min(s, t, k) >= 1, "H1 needs min(s, t, k) >= 1")
        core = [(0, 1), (1, 2)]
        base = 3
    elif variant == 2:
        _require(max(s, t) >= 1 and k >= 1, "H2 needs max(s, t) >= 1 and k >= 1")
        core = [(0, 3), (3, 1), (1, 2)]
        base = 4
    elif variant == 3:
        _require(max(s, t, k) >= 1, "H3 needs max(s, t, k) >= 1")
        core = [(0, 3), (3, 1), (1, 4), (4, 2)]
        base = 5
    elif variant == 4:
        _require(sum(x > 0 for x in (s, t, k)) >= 2, "H4 needs two of s, t, k positive")
        h2 = [(0, 3), (3, 1), (1, 2)]
        core = [e for e in h2 if e != (1, 2)] + [(2, 3)]
        base = 4
    else:
        raise GraphError("h_family variant must be 1..4")
    edges = core + _pendants(base, 0, s) + _pendants(base + s, 1, t) + _pendants(base + s + t, 2, k)
    g = from_edges(base + s + t + k, edges)
    return _assert_alpha(g, g.n - 3, f"H{variant}({s},{t},{k})")


def f_family(s: int, t: int) -> Graph:
    """Cliques on ``0..s-1`` and ``s..s+t-1`` bridged by ``u = 0`` -- ``v = s``."""
    _require(s >= 1 and t >= 1 and s + t >= 3, "F needs s, t >= 1 and s + t >= 3")
    g = complement(complete_bipartite(s, t)).add_edges([(0, s)])
    return _assert_alpha(g, 2, f"F({s},{t})")


def s_star(n: int, k: int) -> Graph:
    """Star K(1, n-k) centred at 0 with a pendant on each of leaves ``1..k-1``.

    Leaves are ``1..n-k``; the pendant on leaf ``j`` is ``n-k+j``.  Accepts
    ``n >= 2k`` so the balanced case ``n = 2k`` is available to tree searches.
    """
    _require(k >= 1 and n >= 2 * k and n >= 2, "S* needs k >= 1 and n >= 2k")
    edges = [(0, j) for j in range(1, n - k + 1)] + [(j, n - k + j) for j in range(1, k)]
    g = from_edges(n, edges)
    return _assert_alpha(g, n - k, f"S*({n},{n - k})")


def k_split(n: int, i: int) -> Graph:
    """Independent set ``0..i-1`` joined to a clique on ``i..n-1``."""
    _require(1 <= i <= n - 1, "k_split needs 1 <= i <= n-1")
    g = join(empty(i), complete(n - i))
    return _assert_alpha(g, i, f"K{i}^c v K{n - i}")


# -- text form ------------------------------------------------------------------

@dataclass(frozen=True)
class FamilySpec:
    kind: str
    params: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind}({','.join(map(str, self.params))})"

    def build(self) -> Graph:
        k, p = self.kind, self.params
        builders = {
            "path": path,
            "cycle": cycle,
            "complete": complete,
            "complete_bipartite": complete_bipartite,
            "star": star,
            "tshape": t_shape,
            "doublesnake": double_snake,
            "g1": lambda s, t: g_family(1, s, t),
            "g2": lambda s, t: g_family(2, s, t),
            "h1": lambda s, t, k_: h_family(1, s, t, k_),
            "h2": lambda s, t, k_: h_family(2, s, t, k_),
            "h3": lambda s, t, k_: h_family(3, s, t, k_),
            "h4": lambda s, t, k_: h_family(4, s, t, k_),
            "f": f_family,
            "sstar": s_star,
            "ksplit": k_split,
            "empty": empty,
        }
        return builders[k](*p)


_SPEC_RE = re.compile(r"^\s*([A-Za-z_0-9]+?)\s*\(\s*([-0-9,\s]*)\)\s*$")


def parse_spec(text: str) -> FamilySpec:
    """Parse ``kind(p1,p2,...)``, e.g. ``h3(3,1,3)`` or ``cycle(9)``."""
    m = _SPEC_RE.match(text)
    if not m:
        raise GraphError(f"malformed family spec {text!r}")
    kind = m.group(1).lower()
    kind = ALIASES.get(kind, kind)
    if kind not in KINDS:
        raise GraphError(f"unknown family {kind!r}; known: {', '.join(sorted(KINDS))}")
    raw = m.group(2).strip()
    params = tuple(int(x) for x in raw.split(",")) if raw else ()
    if len(params) != KINDS[kind]:
        raise GraphError(f"{kind} takes {KINDS[kind]} parameter(s), got {len(params)}")
    return FamilySpec(kind, params)


def build(text: str) -> Graph:
    return parse_spec(text).build()
