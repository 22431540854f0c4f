from __future__ import annotations

import pytest

from alpha_spectra import families as fam
from alpha_spectra.canon import are_isomorphic, canonical_key
from alpha_spectra.graph import GraphError, complement, is_connected
from alpha_spectra.invariants import independence_number, is_tree, matching_number


def test_basic_examples():
    snake = fam.t_shape(1, 1, 5)
    assert snake.n == 8 and is_tree(snake)
    assert fam.path(2).edges() == [(0, 1)]
    ds = fam.double_snake(6)
    assert sorted(ds.degrees()) == [1, 1, 1, 1, 3, 3] and ds.has_edge(0, 1)


@pytest.mark.parametrize("a,b,c", [(1, 1, 1), (1, 2, 2), (1, 1, 6), (2, 3, 4)])
def test_t_shape_structure(a, b, c):
    t = fam.t_shape(a, b, c)
    assert t.n == a + b + c + 1
    assert [v for v in range(t.n) if t.degree(v) == 3] == [0]
    rest = t.delete_vertex(0)
    sizes = sorted(rest.induced(range(lo, lo + k)).size + 1 for lo, k in ((0, a), (a, b), (a + b, c)))
    assert sizes == sorted([a, b, c]) and rest.size == a + b + c - 3


@pytest.mark.parametrize("n", range(6, 13))
def test_double_snake_structure(n):
    w = fam.double_snake(n)
    major = [v for v in range(n) if w.degree(v) == 3]
    assert major == [0, 1] and is_tree(w)
    rest = w.delete_vertex(1).delete_vertex(0)
    isolated = [v for v in range(rest.n) if rest.degree(v) == 0]
    assert len(isolated) == 4 + (1 if n == 7 else 0)
    assert rest.size == max(n - 7, 0)


def test_g_family_examples():
    assert are_isomorphic(fam.g_family(2, 1, 1), fam.path(5))
    assert are_isomorphic(fam.g_family(2, 2, 1), fam.t_shape(1, 1, 3))
    assert are_isomorphic(fam.g_family(1, 1, 1), fam.path(4))


def test_h_family_examples():
    m = 4
    h = fam.h_family(3, m - 1, m - 3, m - 1)
    assert h.n == 12 and independence_number(h) == 9
    broom = fam.h_family(3, 0, 4, 0)
    assert broom.n == 9 and is_tree(broom)
    spider = fam.h_family(1, 1, 1, 1)
    assert spider.n == 6 and independence_number(spider) == 3


def test_f_family_examples():
    assert are_isomorphic(fam.f_family(2, 2), fam.path(4))
    assert independence_number(fam.f_family(5, 6)) == 2
    assert fam.f_family(3, 3).size == 7


def test_s_star_examples():
    assert are_isomorphic(fam.s_star(5, 1), fam.star(5))
    g = fam.s_star(9, 3)
    assert matching_number(g) == 3 and independence_number(g) == 6


def test_k_split_examples():
    assert are_isomorphic(fam.k_split(6, 1), fam.complete(6))
    assert are_isomorphic(fam.k_split(6, 5), fam.star(6))
    assert independence_number(fam.k_split(7, 3)) == 3


def _legal(variant_check, limit=11):
    for s in range(limit):
        for t in range(limit):
            for k in range(limit):
                try:
                    g = variant_check(s, t, k)
                except GraphError:
                    continue
                if g.n <= limit:
                    yield s, t, k, g


def test_every_legal_g_parameter_has_independence_n_minus_2():
    seen = 0
    for variant in (1, 2):
        for s in range(10):
            for t in range(10):
                try:
                    g = fam.g_family(variant, s, t)
                except GraphError:
                    continue
                if g.n > 11:
                    continue
                assert independence_number(g) == g.n - 2 and is_connected(g)
                seen += 1
    assert seen > 50


@pytest.mark.parametrize("variant,base", [(1, 3), (2, 4), (3, 5), (4, 4)])
def test_every_legal_h_parameter_has_independence_n_minus_3(variant, base):
    seen = 0
    for s, t, k, g in _legal(lambda s, t, k: fam.h_family(variant, s, t, k)):
        assert g.n == base + s + t + k
        assert independence_number(g) == g.n - 3 and is_connected(g)
        seen += 1
    assert seen > 10


def test_f_and_s_star_and_k_split_over_all_small_parameters():
    for s in range(1, 11):
        for t in range(1, 11 - s + 1):
            if s + t >= 3:
                g = fam.f_family(s, t)
                assert independence_number(g) == 2
                assert g.size == s * (s - 1) // 2 + t * (t - 1) // 2 + 1
    for n in range(2, 12):
        for k in range(1, n // 2 + 1):
            g = fam.s_star(n, k)
            assert is_tree(g) and independence_number(g) == n - k and matching_number(g) == k
        for i in range(1, n):
            assert independence_number(fam.k_split(n, i)) == i


def test_symmetries():
    for s in range(0, 5):
        for t in range(0, 5):
            if max(s, t) >= 1:
                assert canonical_key(fam.g_family(2, s, t)) == canonical_key(fam.g_family(2, t, s))
    for s, t, k in [(1, 2, 3), (0, 1, 2), (3, 0, 1), (2, 2, 0)]:
        assert canonical_key(fam.h_family(3, s, t, k)) == canonical_key(fam.h_family(3, k, t, s))


@pytest.mark.parametrize("s,t", [(1, 2), (2, 3), (4, 4), (5, 6)])
def test_f_is_complement_of_complete_bipartite_minus_an_edge(s, t):
    kst = fam.complete_bipartite(s, t).remove_edges([(0, s)])
    assert are_isomorphic(complement(kst), fam.f_family(s, t))


def test_h4_is_an_edge_swap_on_h2():
    s, t, k = 2, 1, 2
    h2 = fam.h_family(2, s, t, k)
    swapped = h2.remove_edges([(1, 2)]).add_edges([(2, 3)])
    assert swapped == fam.h_family(4, s, t, k)


@pytest.mark.parametrize(
    "call",
    [
        lambda: fam.t_shape(2, 1, 1),
        lambda: fam.double_snake(5),
        lambda: fam.g_family(1, 0, 3),
        lambda: fam.g_family(2, 0, 0),
        lambda: fam.h_family(1, 0, 1, 1),
        lambda: fam.h_family(2, 1, 1, 0),
        lambda: fam.h_family(3, 0, 0, 0),
        lambda: fam.h_family(4, 0, 0, 3),
        lambda: fam.f_family(1, 1),
        lambda: fam.s_star(5, 3),
        lambda: fam.k_split(4, 4),
        lambda: fam.cycle(2),
    ],
)
def test_constraint_violations(call):
    with pytest.raises(GraphError):
        call()


def test_parse_spec():
    spec = fam.parse_spec("H3(3, 1, 3)")
    assert spec.kind == "h3" and spec.params == (3, 1, 3) and str(spec) == "h3(3,1,3)"
    assert fam.parse_spec("s_star(9,3)").kind == "sstar"
    assert fam.build("cycle(9)").n == 9
    for bad in ("cycle", "cycle(9", "nope(3)", "cycle(1,2)", "h3(x,1,1)"):
        with pytest.raises(GraphError):
            fam.parse_spec(bad)
