from __future__ import annotations

import jsonschema
import networkx as nx
import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from alpha_spectra import families as fam
from alpha_spectra.canon import are_isomorphic, canonical_key
from alpha_spectra.cli import report_schema
from alpha_spectra.graph import GraphError, from_edges
from alpha_spectra.graph6 import decode
from alpha_spectra.invariants import independence_number
from alpha_spectra.search import (
    TIE_TOL,
    HypothesisError,
    SearchRangeError,
    TheoremVerdict,
    _select,
    _strict_rerun,
    census,
    clear_census_cache,
    compare_pair,
    extremal,
    structured_space,
    verify_theorem,
)
from helpers import connected_graphs


def _winner(report):
    assert len(report.winners) == 1, report.winners
    return decode(report.winners[0])


# -- examples -----------------------------------------------------------------------

def test_min_at_half_order_is_the_path():
    assert are_isomorphic(_winner(extremal(6, 3, 0.0, "min", "all")), fam.path(6))


def test_min_at_order_minus_two():
    assert are_isomorphic(_winner(extremal(7, 5, 0.2, "min", "all")), fam.g_family(2, 2, 2))


def test_max_is_the_split_graph():
    assert are_isomorphic(_winner(extremal(6, 3, 0.4, "max", "all")), fam.k_split(6, 3))


def test_min_at_order_minus_one_is_the_star():
    assert are_isomorphic(_winner(extremal(6, 5, 0.5, "min", "all")), fam.star(6))


# -- independent oracle -------------------------------------------------------------

def _atlas_extremes(n: int, i: int, alpha: float):
    """Optimal index values from the networkx atlas of all graphs on <= 7 vertices."""
    lams = []
    for h in nx.graph_atlas_g():
        if h.number_of_nodes() != n or not nx.is_connected(h):
            continue
        if max(len(c) for c in nx.find_cliques(nx.complement(h))) != i:
            continue
        a = nx.to_numpy_array(h)
        m = alpha * np.diag(a.sum(axis=1)) + (1 - alpha) * a
        lams.append(np.linalg.eigvalsh(m)[-1])
    return min(lams), max(lams)


@pytest.mark.parametrize("n", [4, 5, 6])
@pytest.mark.parametrize("alpha", [0.0, 0.35, 0.8])
def test_extremal_values_match_the_atlas(n, alpha):
    for i in range(1, n):
        lo, hi = _atlas_extremes(n, i, alpha)
        assert extremal(n, i, alpha, "min", "all").lam == pytest.approx(lo, abs=1e-9)
        assert extremal(n, i, alpha, "max", "all").lam == pytest.approx(hi, abs=1e-9)


# -- report invariants ---------------------------------------------------------------

@pytest.mark.parametrize("n,i", [(5, 2), (6, 2), (7, 3), (7, 4)])
@pytest.mark.parametrize("direction", ["min", "max"])
def test_winners_have_the_requested_independence_number(n, i, direction):
    r = extremal(n, i, 0.5, direction, "all")
    assert r.winners
    for w in r.winners:
        assert independence_number(decode(w)) == i
    assert r.runner_up_gap is None or r.runner_up_gap >= 0


def test_ties_within_tolerance_are_all_kept():
    # two non-isomorphic graphs on 6 vertices sharing the adjacency index 1 + sqrt 2
    a, b = decode("ECqg"), decode("EQow")
    assert not are_isomorphic(a, b)
    rows = np.array([a.rows, b.rows, fam.path(6).rows], dtype=np.uint64)
    winners, lam, gap = _select(rows, 6, 0.0, "max", TIE_TOL)
    assert {canonical_key(g) for g in winners} == {canonical_key(a), canonical_key(b)}
    assert lam == pytest.approx(1 + 2**0.5) and gap > 0.5
    # the strict rerun keeps both, since the tie is exact
    assert len(_strict_rerun(winners, 0.0, "max")) == 2


def test_winners_are_in_key_order():
    for n in (5, 6, 7):
        for i in range(1, n):
            r = extremal(n, i, 0.0, "max", "all")
            keys = [canonical_key(decode(w)) for w in r.winners]
            assert keys == sorted(keys)


def test_determinism():
    a = extremal(7, 3, 0.3, "min", "all")
    b = extremal(7, 3, 0.3, "min", "all")
    assert (a.winners, a.lam, a.runner_up_gap) == (b.winners, b.lam, b.runner_up_gap)


def test_parallel_census_matches_serial():
    clear_census_cache()
    serial = census("all", 7, threads=1)
    clear_census_cache()
    parallel = census("all", 7, threads=2)
    assert serial.keys() == parallel.keys()
    for i in serial:
        assert np.array_equal(serial[i], parallel[i])
    for i in serial:
        r1 = extremal(7, i, 0.4, "min", "all", threads=1)
        r2 = extremal(7, i, 0.4, "min", "all", threads=2)
        assert r1.winners == r2.winners and r1.lam == r2.lam


def test_tree_class():
    r = extremal(8, 6, 0.3, "max", "trees")
    assert are_isomorphic(_winner(r), fam.s_star(8, 2))


def test_bipartite_class():
    r = extremal(7, 4, 0.7, "max", "bipartite")
    assert are_isomorphic(_winner(r), fam.complete_bipartite(4, 3))


def test_structured_space_contains_the_h3_graphs():
    keys = {canonical_key(g) for g in structured_space(10)}
    assert canonical_key(fam.h_family(3, 2, 1, 2)) in keys
    for g in structured_space(10):
        assert g.n == 10


@pytest.mark.parametrize(
    "args,exc",
    [
        ((6, 3, 0.5, "sideways", "all"), ValueError),
        ((6, 3, 1.0, "min", "all"), ValueError),
        ((6, 3, -0.1, "min", "all"), ValueError),
        ((6, 6, 0.5, "min", "all"), GraphError),
        ((6, 2, 0.5, "min", "planar"), GraphError),
        ((12, 3, 0.5, "min", "bipartite"), SearchRangeError),
        ((5, 1, 0.5, "min", "trees"), GraphError),
    ],
)
def test_extremal_errors(args, exc):
    with pytest.raises(exc):
        extremal(*args)


def test_report_validates_against_the_schema():
    jsonschema.validate(extremal(6, 3, 0.2, "min", "all").to_dict(), report_schema())


# -- compare_pair --------------------------------------------------------------------

def test_compare_pair_with_itself_is_zero():
    rows = compare_pair(fam.cycle(7), fam.cycle(7), [0.0, 0.5, 0.9])
    assert [r.sign for r in rows] == [0, 0, 0]


@settings(max_examples=40)
@given(connected_graphs(min_n=4, max_n=8), st.sampled_from([0.0, 0.3, 0.7]))
def test_path_is_never_larger(g, a):
    (row,) = compare_pair(fam.path(g.n), g, [a])
    assert row.sign <= 0
    if not are_isomorphic(g, fam.path(g.n)):
        assert row.sign < 0


def test_t_shape_is_below_other_graphs_at_order_nine():
    t = fam.t_shape(1, 1, 6)
    for g in (fam.star(9), fam.double_snake(9), fam.g_family(2, 3, 3), fam.complete(9)):
        for row in compare_pair(t, g, [0.0, 0.4, 0.8]):
            assert row.sign <= 0


def test_compare_pair_rejects_disconnected():
    with pytest.raises(GraphError):
        compare_pair(from_edges(4, [(0, 1), (2, 3)]), fam.path(4), [0.0])


# -- verify_theorem ------------------------------------------------------------------

@pytest.mark.parametrize(
    "tid,ns,grid",
    [
        ("thm1.1", range(6, 9), (0.0, 0.25, 0.5, 0.75)),
        ("thm3.1", range(5, 8), (0.0, 0.5, 0.9)),
        ("thm1.5-tree", range(6, 10), (0.0, 0.3, 0.6, 0.9)),
        ("thm1.5", range(5, 7), (0.5,)),
        ("thm1.5-bipartite", range(4, 8), (0.5, 0.7, 0.9)),
        ("thm1.6", range(3, 7), (0.0, 0.3, 0.6, 0.9)),
        ("lem1.1", range(4, 10), (0.0, 0.5, 0.9)),
        ("lem2.1", range(3, 8), (0.0, 0.5, 0.9)),
    ],
)
def test_verify_passes_on_small_grids(tid, ns, grid):
    v = verify_theorem(tid, ns, grid)
    assert v.status == "pass", v.witnesses
    assert v.points
    jsonschema.validate(v.to_dict(), report_schema())


def test_thm32_at_order_nine():
    v = verify_theorem("thm3.2", [9], [0.5, 0.6, 0.8])
    assert v.status == "pass"
    for p in v.points:
        g = decode(p.winners[0])
        assert independence_number(g) == 6


def test_thm32_reports_only_the_shape_below_one_half():
    v = verify_theorem("thm3.2", [9], [0.25])
    assert v.status == "pass"
    assert "|s-k|<=1" in v.points[0].expected and "specific" not in v.points[0].expected


@pytest.mark.parametrize(
    "tid,ns,grid",
    [
        ("thm5.1", [11], [0.8]),
        ("thm5.1", [9], [0.5]),
        ("thm3.1", [10], [0.5]),
        ("thm3.2", [8], [0.5]),
        ("thm1.5-bipartite", [6], [0.3]),
        ("thm1.1", [6], [1.0]),
        ("thm1.1", [6], []),
        ("thm1.1", [], [0.5]),
        ("thm9.9", [6], [0.5]),
    ],
)
def test_verify_rejects_grids_outside_the_hypotheses(tid, ns, grid):
    with pytest.raises(HypothesisError):
        verify_theorem(tid, ns, grid)


def test_verdict_plumbing():
    with pytest.raises(ValueError):
        TheoremVerdict("x", "g", "fail")
    with pytest.raises(ValueError):
        TheoremVerdict("x", "g", "maybe")
    assert TheoremVerdict("x", "g", "pass").ok
