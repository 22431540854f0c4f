"""Extremal A_alpha-index search and theorem verification harnesses.

A census is one pass over an enumeration stream that buckets every graph by
an invariant (independence number by default) into packed row arrays.  Each
extremal query then evaluates one bucket at one alpha with batched LAPACK
eigenvalues, and the winners are re-checked with the package's own solver.
Censuses are cached per process, so a grid of queries pays for enumeration
once.
"""
from __future__ import annotations

import math
import multiprocessing as mp
import os
import time
from dataclasses import asdict, dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from . import enumerate as en
from . import families as fam
from .canon import canonical_key
from .graph import Graph, GraphError, all_shift_moves, is_connected, subdivide_edge
from .graph6 import encode
from .invariants import independence_number, matching_number
from .spectral import batch_index, index, spectral_radius, threshold_constants

TIE_TOL = 1e-9
STRICT_TOL = 1e-12
SCHEMA = "report-v1"

CLASS_LIMITS = {"all": 9, "trees": en.MAX_TREES, "bipartite": en.MAX_BIPARTITE, "any": 9}


class HypothesisError(ValueError):
    """A requested grid point lies outside the statement's hypotheses."""


class SearchRangeError(ValueError):
    """No enumeration strategy covers the requested order."""


def resolve_threads(threads: int | None = None) -> int:
    if threads is None:
        env = os.environ.get("ALPHA_SPECTRA_THREADS")
        threads = int(env) if env else (os.cpu_count() or 1)
    if threads < 1:
        raise ValueError("threads must be positive")
    return threads


# -- censuses -------------------------------------------------------------------

def _stream_for(cls: str, n: int, shard: tuple[int, int] | None) -> Iterable[Graph]:
    if cls == "all":
        return en.connected_graphs(n, shard)
    if cls == "any":
        return en.all_graphs(n, shard)
    if cls == "trees":
        return en.trees(n, shard)
    if cls == "bipartite":
        return en.connected_bipartite(n, shard)
    if cls == "independence-two":
        return en.connected_independence_two(n, shard)
    raise GraphError(f"unknown class {cls!r}")


def _bucket(cls: str, n: int, invariant: str, shard: tuple[int, int] | None) -> dict[int, list[tuple[int, ...]]]:
    out: dict[int, list[tuple[int, ...]]] = {}
    for g in _stream_for(cls, n, shard):
        if invariant == "matching":
            key = matching_number(g)
        elif cls == "independence-two":
            key = 2
        else:
            key = independence_number(g)
        out.setdefault(key, []).append(g.rows)
    return out


def _bucket_job(args: tuple) -> dict[int, list[tuple[int, ...]]]:
    return _bucket(*args)


_CENSUS: dict[tuple[str, int, str], dict[int, np.ndarray]] = {}


def census(cls: str, n: int, invariant: str = "independence", threads: int | None = None) -> dict[int, np.ndarray]:
    """Graphs of a class bucketed by invariant value, as ``(count, n)`` row arrays."""
    key = (cls, n, invariant)
    if key in _CENSUS:
        return _CENSUS[key]
    threads = resolve_threads(threads)
    if threads == 1:
        parts = [_bucket(cls, n, invariant, None)]
    else:
        jobs = [(cls, n, invariant, (j, threads)) for j in range(threads)]
        with mp.get_context("fork").Pool(threads) as pool:
            parts = pool.map(_bucket_job, jobs)
    merged: dict[int, list[tuple[int, ...]]] = {}
    for part in parts:
        for k, rows in part.items():
            merged.setdefault(k, []).extend(rows)
    # sorted rows make the census independent of how it was sharded
    arrays = {k: np.array(sorted(v), dtype=np.uint64).reshape(len(v), n) for k, v in sorted(merged.items())}
    _CENSUS[key] = arrays
    return arrays


def clear_census_cache() -> None:
    _CENSUS.clear()
    _STRUCTURED.clear()


# -- restricted candidate spaces --------------------------------------------------

def _dedupe(graphs: Iterable[Graph]) -> list[Graph]:
    seen: dict[bytes, Graph] = {}
    for g in graphs:
        seen.setdefault(canonical_key(g), g)
    return [seen[k] for k in sorted(seen)]


def h_parameterizations(n: int) -> list[Graph]:
    """Every H1..H4 of order ``n`` whose parameters meet the family constraints."""
    out = []
    for variant, extra in ((1, 3), (2, 4), (3, 5), (4, 4)):
        total = n - extra
        for s in range(total + 1):
            for t in range(total - s + 1):
                try:
                    out.append(fam.h_family(variant, s, t, total - s - t))
                except GraphError:
                    pass
    return out


_STRUCTURED: dict[int, list[Graph]] = {}


def structured_space(n: int) -> list[Graph]:
    """Candidates for the minimum over connected graphs with independence
    number ``n - 3``: the H families, one edge shift away from them, and
    subdivisions of the order ``n - 1`` H families."""
    if n in _STRUCTURED:
        return _STRUCTURED[n]
    base = h_parameterizations(n)
    pool = list(base)
    for g in base:
        for v, u, s in all_shift_moves(g):
            pool.append(g.remove_edges([(v, w) for w in s]).add_edges([(u, w) for w in s]))
    for g in h_parameterizations(n - 1):
        for u, v in g.edges():
            pool.append(subdivide_edge(g, u, v))
    keep = [g for g in pool if is_connected(g) and independence_number(g) == n - 3]
    _STRUCTURED[n] = _dedupe(keep)
    return _STRUCTURED[n]


def restricted_space(n: int, i: int) -> list[Graph]:
    """Trees with independence number ``i`` plus ``C_n`` and ``K_n`` when
    they have that independence number."""
    rows = census("trees", n).get(i)
    graphs = [Graph._trusted(n, tuple(int(x) for x in r)) for r in rows] if rows is not None else []
    if i == n // 2:
        graphs.append(fam.cycle(n))
    if i == 1:
        graphs.append(fam.complete(n))
    return graphs


# -- search -------------------------------------------------------------------------

@dataclass(frozen=True)
class SearchReport:
    n: int
    i: int
    alpha: float
    direction: str
    cls: str
    winners: tuple[str, ...]
    lam: float
    runner_up_gap: float | None
    elapsed: float
    space: str = "census"
    candidates: int = 0
    tie_tolerance: float = TIE_TOL

    def to_dict(self) -> dict:
        d = asdict(self)
        d["class"] = d.pop("cls")
        d["lambda"] = d.pop("lam")
        d["kind"] = "search-report"
        d["schema"] = SCHEMA
        return _plain(d)


def _plain(obj):
    """Tuples to lists, recursively, so the dict is JSON-shaped."""
    if isinstance(obj, dict):
        return {k: _plain(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_plain(v) for v in obj]
    return obj


def _rows_to_graphs(n: int, rows: np.ndarray) -> list[Graph]:
    return [Graph._trusted(n, tuple(int(x) for x in r)) for r in rows]


def _own_index(g: Graph, alpha: float) -> float:
    if is_connected(g):
        return spectral_radius(g, alpha).lam
    return index(g, alpha)


def _select(rows: np.ndarray, n: int, alpha: float, direction: str, tol: float) -> tuple[list[Graph], float, float | None]:
    lams = batch_index(rows, alpha)
    signed = lams if direction == "min" else -lams
    best = float(signed.min())
    tied = np.flatnonzero(signed <= best + tol)
    rest = np.delete(signed, tied)
    gap = float(rest.min() - best) if rest.size else None
    winners = _rows_to_graphs(n, rows[tied])
    return winners, float(lams[tied[0]]), gap


def _space_rows(n: int, i: int, cls: str, threads: int | None) -> tuple[np.ndarray | None, str]:
    if cls == "all":
        if n <= CLASS_LIMITS["all"]:
            return census("all", n, threads=threads).get(i), "census"
        if i == 2 and n <= en.MAX_TRIANGLE_FREE:
            return census("independence-two", n, threads=threads).get(2), "census:triangle-free-complements"
        if i == n - 3 and n in (10, 11):
            graphs = structured_space(n)
            return np.array([g.rows for g in graphs], dtype=np.uint64), "structured:h-families+shift+subdivision"
        if n <= en.MAX_TREES:
            graphs = restricted_space(n, i)
            rows = np.array([g.rows for g in graphs], dtype=np.uint64) if graphs else None
            return rows, "restricted:trees+cycle+complete"
        raise SearchRangeError(f"no search strategy for class 'all' at n={n}")
    if cls not in CLASS_LIMITS:
        raise GraphError(f"unknown class {cls!r}; expected all, trees, bipartite or any")
    if n > CLASS_LIMITS[cls]:
        raise SearchRangeError(f"class {cls!r} supports n <= {CLASS_LIMITS[cls]}")
    return census(cls, n, threads=threads).get(i), "census"


def extremal(
    n: int,
    i: int,
    alpha: float,
    direction: str = "min",
    cls: str = "all",
    threads: int | None = None,
    tol: float = TIE_TOL,
) -> SearchReport:
    """Minimize or maximize the A_alpha-index over a class with independence number ``i``.

    Every graph within ``tol`` of the optimum is reported, ordered by
    canonical key.
    """
    if direction not in ("min", "max"):
        raise ValueError("direction must be 'min' or 'max'")
    if not 0.0 <= alpha < 1.0:
        raise ValueError(f"alpha must lie in [0, 1), got {alpha}")
    start = time.perf_counter()
    rows, space = _space_rows(n, i, cls, threads)
    if rows is None or len(rows) == 0:
        raise GraphError(f"no graphs in class {cls!r} with n={n} and independence number {i}")
    return _report(rows, n, i, alpha, direction, cls, tol, space, start)


def _report(rows, n, i, alpha, direction, cls, tol, space, start, invariant: str | None = "independence") -> SearchReport:
    winners, lam, gap = _select(rows, n, alpha, direction, tol)
    keyed = sorted(((canonical_key(g), g) for g in winners), key=lambda kv: kv[0])
    winners = [g for _, g in keyed]
    # the bucketing is trusted, but winners are cheap to re-check
    measure = {"independence": independence_number, "matching": matching_number}.get(invariant)
    for g in winners if measure else ():
        if measure(g) != i:
            raise AssertionError(f"winner {encode(g)} has {invariant} number {measure(g)}, expected {i}")
    lam = _own_index(winners[0], alpha)
    return SearchReport(
        n=n,
        i=i,
        alpha=alpha,
        direction=direction,
        cls=cls,
        winners=tuple(encode(g) for g in winners),
        lam=lam,
        runner_up_gap=gap,
        elapsed=time.perf_counter() - start,
        space=space,
        candidates=int(len(rows)),
        tie_tolerance=tol,
    )


# -- pairwise comparison ----------------------------------------------------------

@dataclass(frozen=True)
class PairRow:
    alpha: float
    lam_a: float
    lam_b: float
    sign: int


def compare_pair(ga: Graph, gb: Graph, alpha_grid: Sequence[float], tol: float = TIE_TOL) -> list[PairRow]:
    """Sign of ``lambda(ga) - lambda(gb)`` per alpha; zero inside ``tol``."""
    if not (is_connected(ga) and is_connected(gb)):
        raise GraphError("compare_pair needs connected graphs")
    out = []
    for a in alpha_grid:
        la = spectral_radius(ga, a).lam
        lb = spectral_radius(gb, a).lam
        d = la - lb
        out.append(PairRow(a, la, lb, 0 if abs(d) <= tol else (1 if d > 0 else -1)))
    return out


# -- theorem verification ---------------------------------------------------------

@dataclass(frozen=True)
class GridPoint:
    n: int
    i: int
    alpha: float
    expected: str
    winners: tuple[str, ...]
    lam: float
    runner_up_gap: float | None
    status: str
    space: str
    note: str = ""


@dataclass(frozen=True)
class TheoremVerdict:
    theorem_id: str
    parameter_grid: str
    status: str
    witnesses: tuple[str, ...] = ()
    points: tuple[GridPoint, ...] = ()
    notes: tuple[str, ...] = ()
    elapsed: float = 0.0

    def __post_init__(self) -> None:
        if self.status not in ("pass", "fail", "tie-flagged"):
            raise ValueError(f"bad status {self.status!r}")
        if self.status == "fail" and not self.witnesses:
            raise ValueError("a failing verdict needs a witness")

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self) -> dict:
        d = asdict(self)
        d["kind"] = "theorem-verdict"
        d["schema"] = SCHEMA
        return _plain(d)


@dataclass(frozen=True)
class Expectation:
    """Predicted winners at one grid point.

    ``keys`` is the set of allowed canonical keys.  ``exact`` demands a single
    winner in that set; otherwise every winner must lie in it (shape claims).
    ``asserted`` is false where the statement makes no claim and the point
    is only reported.
    """

    label: str
    keys: frozenset[bytes]
    exact: bool = True
    asserted: bool = True


def _expect(label: str, graphs: Iterable[Graph], exact: bool = True, asserted: bool = True) -> Expectation:
    return Expectation(label, frozenset(canonical_key(g) for g in graphs), exact, asserted)


def _strict_rerun(winners: list[Graph], alpha: float, direction: str) -> list[Graph]:
    lams = [_own_index(g, alpha) for g in winners]
    best = min(lams) if direction == "min" else max(lams)
    return [g for g, lam in zip(winners, lams) if abs(lam - best) <= STRICT_TOL]


def _judge(report: SearchReport, exp: Expectation, alpha: float) -> tuple[str, str, list[Graph]]:
    from .graph6 import decode

    winners = [decode(w) for w in report.winners]
    note = ""
    if len(winners) > 1:
        winners = _strict_rerun(winners, alpha, report.direction)
        note = f"near-tie of {len(report.winners)} within {TIE_TOL:g}; rerun at {STRICT_TOL:g} kept {len(winners)}"
    keys = [canonical_key(g) for g in winners]
    inside = [k in exp.keys for k in keys]
    if not exp.asserted:
        return "reported", note, []
    if all(inside) and (len(winners) == 1 or not exp.exact):
        return "pass", note, []
    if any(inside) and len(winners) > 1:
        return "tie-flagged", note, [g for g, ok in zip(winners, inside) if not ok]
    return "fail", note, [g for g, ok in zip(winners, inside) if not ok]


def _run_points(
    theorem_id: str,
    points: list[tuple[int, int, float, str, Expectation, str]],
    threads: int | None,
    notes: list[str],
    grid: str,
    searcher: Callable | None = None,
) -> TheoremVerdict:
    start = time.perf_counter()
    out = []
    witnesses: list[str] = []
    statuses = []
    for n, i, a, direction, exp, cls in points:
        if searcher is not None:
            report = searcher(n, i, a, direction)
        else:
            report = extremal(n, i, a, direction, cls, threads)
        status, note, bad = _judge(report, exp, a)
        statuses.append(status)
        witnesses.extend(encode(g) for g in bad)
        out.append(
            GridPoint(n, i, a, exp.label, report.winners, report.lam, report.runner_up_gap, status, report.space, note)
        )
    if "fail" in statuses:
        overall = "fail"
    elif "tie-flagged" in statuses:
        overall = "tie-flagged"
    else:
        overall = "pass"
    for p in out:
        if p.space != "census" and p.space not in notes:
            notes.append(p.space)
    return TheoremVerdict(
        theorem_id, grid, overall, tuple(dict.fromkeys(witnesses)), tuple(out), tuple(notes), time.perf_counter() - start
    )


def _check_alpha_range(theorem_id: str, grid: Sequence[float], lo: float, hi: float, hi_open: bool = True) -> None:
    for a in grid:
        if a < lo or a > hi or (hi_open and a == hi):
            bracket = ")" if hi_open else "]"
            raise HypothesisError(f"{theorem_id}: alpha {a} outside [{lo}, {hi}{bracket}")


def _check_n_range(theorem_id: str, ns: Sequence[int], lo: int, hi: int) -> None:
    for n in ns:
        if not lo <= n <= hi:
            raise HypothesisError(f"{theorem_id}: n={n} outside supported range {lo}..{hi}")


def _h3_shapes(n: int) -> list[Graph]:
    total = n - 5
    out = []
    for s in range(total + 1):
        for k in range(total - s + 1):
            t = total - s - k
            if abs(s - k) <= 1 and max(s, t, k) >= 1:
                out.append(fam.h_family(3, s, t, k))
    return out


def _h3_specific(n: int, alpha: float) -> tuple[Graph, bool]:
    m, r = divmod(n, 3)
    if r == 0:
        return fam.h_family(3, m - 1, m - 3, m - 1), alpha >= 0.5
    if r == 1:
        return fam.h_family(3, m - 1, m - 2, m - 1), alpha >= 0.5
    return fam.h_family(3, m, m - 3, m), alpha >= 11 / 20


def thm11_prediction(n: int, i: int) -> Graph | None:
    if i == 1:
        return fam.complete(n)
    if i == n - 1:
        return fam.star(n)
    if i == (n + 1) // 2:
        return fam.path(n)
    if i == n // 2:
        return fam.cycle(n) if n % 2 else fam.path(n)
    if i == n // 2 + 1 and n >= 9:
        return fam.path(n) if n % 2 else fam.t_shape(1, 1, n - 3)
    return None


def thm11_indices(n: int) -> list[int]:
    cand = {1, n // 2, (n + 1) // 2, n - 1}
    if n >= 9:
        cand.add(n // 2 + 1)
    return sorted(i for i in cand if 1 <= i <= n - 1)


THEOREM_IDS = (
    "thm1.1",
    "thm3.1",
    "thm3.2",
    "thm5.1",
    "thm1.5-tree",
    "thm1.5-bipartite",
    "thm1.6",
    "lem1.1",
    "lem2.1",
)
ALIASES = {"thm1.5": "thm1.5-tree"}

DEFAULT_GRIDS = {
    "thm1.1": (0.0, 0.25, 0.5, 0.75, 0.9),
    "thm3.1": (0.0, 0.25, 0.5, 0.75, 0.9),
    "thm3.2": (0.0, 0.25, 0.5, 0.55, 0.75, 0.9),
    "thm5.1": (0.0, 0.375, 0.5, 0.75),
    "thm1.5-tree": (0.0, 0.3, 0.5, 0.6, 0.9),
    "thm1.5-bipartite": (0.5, 0.7, 0.9),
    "thm1.6": (0.0, 0.3, 0.5, 0.6, 0.9),
    "lem1.1": (0.0, 0.3, 0.5, 0.6, 0.9),
    "lem2.1": (0.0, 0.25, 0.5, 0.75, 0.9),
}


def _grid_text(ns: Sequence[int], grid: Sequence[float], extra: str = "") -> str:
    text = f"n in {{{','.join(map(str, ns))}}}; alpha in {{{','.join(f'{a:g}' for a in grid)}}}"
    return text + (f"; {extra}" if extra else "")


def verify_theorem(
    theorem_id: str,
    n_range: Iterable[int],
    alpha_grid: Sequence[float] | None = None,
    threads: int | None = None,
) -> TheoremVerdict:
    """Check one extremal statement at every grid point by exhaustive search.

    Grids outside the statement's hypotheses raise :class:`HypothesisError`.
    With no ``alpha_grid`` a default is used; for ``thm1.1`` it also gets the
    per-order threshold ``s1(n)``.
    """
    tid = ALIASES.get(theorem_id, theorem_id)
    if tid not in THEOREM_IDS:
        raise HypothesisError(f"unknown theorem id {theorem_id!r}; known: {', '.join(THEOREM_IDS)}")
    ns = sorted(set(n_range))
    if not ns:
        raise HypothesisError("empty n range")
    default = alpha_grid is None
    grid = tuple(DEFAULT_GRIDS[tid]) if default else tuple(float(a) for a in alpha_grid)
    if not grid:
        raise HypothesisError("empty alpha grid")
    notes: list[str] = []
    points = []

    if tid == "thm1.1":
        _check_n_range(tid, ns, 3, en.MAX_TREES)
        _check_alpha_range(tid, grid, 0.0, 1.0)
        for n in ns:
            alphas = grid + ((threshold_constants(n)[0],) if default and n >= 4 else ())
            for i in thm11_indices(n):
                pred = thm11_prediction(n, i)
                for a in alphas:
                    points.append((n, i, a, "min", _expect(f"{encode(pred)} (i={i})", [pred]), "all"))
        if any(n > 9 for n in ns):
            notes.append("orders above 9 search trees plus the cycle and complete graph only")
    elif tid == "thm3.1":
        _check_n_range(tid, ns, 5, 9)
        _check_alpha_range(tid, grid, 0.0, 1.0)
        for n in ns:
            pred = fam.g_family(2, math.ceil((n - 3) / 2), (n - 3) // 2)
            for a in grid:
                points.append((n, n - 2, a, "min", _expect(f"G2({math.ceil((n - 3) / 2)},{(n - 3) // 2})", [pred]), "all"))
    elif tid == "thm3.2":
        _check_n_range(tid, ns, 9, 11)
        _check_alpha_range(tid, grid, 0.0, 1.0)
        for n in ns:
            shapes = _h3_shapes(n)
            shape_keys = frozenset(canonical_key(g) for g in shapes)
            for a in grid:
                specific, asserted = _h3_specific(n, a)
                exp = Expectation(
                    f"H3(s,t,k) with |s-k|<=1" + ("; specific " + encode(specific) if asserted else ""),
                    frozenset([canonical_key(specific)]) if asserted else shape_keys,
                    exact=asserted,
                )
                points.append((n, n - 3, a, "min", exp, "all"))
        notes.append("below the specific-part thresholds only the H3 shape is asserted")
    elif tid == "thm5.1":
        _check_n_range(tid, ns, 11, en.MAX_TRIANGLE_FREE)
        _check_alpha_range(tid, grid, 0.0, 0.75, hi_open=False)
        for n in ns:
            s, t = math.ceil(n / 2), n // 2
            for a in grid:
                points.append((n, 2, a, "min", _expect(f"F({s},{t})", [fam.f_family(s, t)]), "all"))
    elif tid == "thm1.5-tree":
        _check_n_range(tid, ns, 4, en.MAX_TREES)
        _check_alpha_range(tid, grid, 0.0, 1.0)
        for n in ns:
            for i in range((n + 1) // 2, n):
                pred = fam.s_star(n, n - i)
                for a in grid:
                    points.append((n, i, a, "max", _expect(f"S*({n},{i})", [pred]), "trees"))
    elif tid == "thm1.5-bipartite":
        _check_n_range(tid, ns, 2, en.MAX_BIPARTITE)
        _check_alpha_range(tid, grid, 0.5, 1.0)
        for n in ns:
            for i in range((n + 1) // 2, n):
                pred = fam.complete_bipartite(i, n - i)
                for a in grid:
                    points.append((n, i, a, "max", _expect(f"K({i},{n - i})", [pred]), "bipartite"))
    elif tid == "thm1.6":
        _check_n_range(tid, ns, 2, 9)
        _check_alpha_range(tid, grid, 0.0, 1.0)
        for n in ns:
            for i in range(1, n):
                pred = fam.k_split(n, i)
                for a in grid:
                    points.append((n, i, a, "max", _expect(f"K{i}^c v K{n - i}", [pred]), "any"))
        notes.append("maximum taken over all graphs of the order, connected or not")
    elif tid == "lem1.1":
        _check_n_range(tid, ns, 4, en.MAX_TREES)
        _check_alpha_range(tid, grid, 0.0, 1.0)

        def by_matching(n: int, mu: int, a: float, direction: str) -> SearchReport:
            rows = census("trees", n, "matching", threads)[mu]
            return _report(rows, n, mu, a, direction, "trees", TIE_TOL, "census:matching", time.perf_counter(), "matching")

        for n in ns:
            for mu in range(1, n // 2 + 1):
                pred = fam.s_star(n, mu)
                for a in grid:
                    points.append((n, mu, a, "max", _expect(f"S*({n},{n - mu}) (mu={mu})", [pred]), "trees"))
        notes.append("the i column holds the matching number")
        return _run_points(tid, points, threads, notes, _grid_text(ns, grid), by_matching)
    elif tid == "lem2.1":
        _check_n_range(tid, ns, 2, 9)
        _check_alpha_range(tid, grid, 0.0, 1.0)

        def over_all(n: int, _i: int, a: float, direction: str) -> SearchReport:
            rows = np.concatenate(list(census("all", n, threads=threads).values()))
            return _report(rows, n, 0, a, direction, "all", TIE_TOL, "census:every-independence-number", time.perf_counter(), None)

        for n in ns:
            for a in grid:
                points.append((n, 0, a, "min", _expect(f"P{n}", [fam.path(n)]), "all"))
        notes.append("minimum over every connected graph of the order; the i column is unused")
        return _run_points(tid, points, threads, notes, _grid_text(ns, grid), over_all)

    return _run_points(tid, points, threads, notes, _grid_text(ns, grid))
