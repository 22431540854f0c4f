"""A_alpha matrices, their index, closed forms, bounds and quotient matrices.

For a graph with adjacency ``A`` and degree diagonal ``D`` the A_alpha
matrix is ``alpha * D + (1 - alpha) * A``; its largest eigenvalue is the
A_alpha-index.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .eigen import determinant, inverse_iteration, symmetric_eigenvalues
from .graph import Graph, GraphError, is_connected

Partition = tuple[tuple[int, ...], ...]


def _check_alpha(alpha: float, allow_one: bool = True) -> None:
    if not 0.0 <= alpha <= 1.0 or (not allow_one and alpha == 1.0):
        raise ValueError(f"alpha must lie in [0, 1{']' if allow_one else ')'}, got {alpha}")


def alpha_matrix(g: Graph, alpha: float) -> np.ndarray:
    _check_alpha(alpha)
    a = np.array(g.adjacency(), dtype=float)
    m = (1.0 - alpha) * a
    m[np.diag_indices(g.n)] = alpha * a.sum(axis=1)
    return m


def alpha_matrices(graphs: Sequence[Graph] | np.ndarray, alpha: float) -> np.ndarray:
    """Stack of A_alpha matrices for graphs of one common order.

    Accepts graphs or a ``(count, n)`` array of adjacency bit rows.
    """
    _check_alpha(alpha)
    if isinstance(graphs, np.ndarray):
        bits = graphs.astype(np.uint64)
    else:
        bits = np.array([g.rows for g in graphs], dtype=np.uint64)
    n = bits.shape[1]
    adj = ((bits[:, :, None] >> np.arange(n, dtype=np.uint64)) & np.uint64(1)).astype(float)
    m = (1.0 - alpha) * adj
    idx = np.arange(n)
    m[:, idx, idx] = alpha * adj.sum(axis=2)
    return m


@dataclass(frozen=True)
class SpectralResult:
    lam: float
    perron: np.ndarray
    residual: float


def spectral_radius(g: Graph, alpha: float, require_connected: bool = True) -> SpectralResult:
    """A_alpha-index with its eigenvector scaled to max-norm one.

    For connected ``g`` and ``alpha < 1`` the vector is the positive Perron
    vector.  Disconnected input raises unless ``require_connected`` is off,
    in which case the vector is only some eigenvector for the index.
    """
    _check_alpha(alpha)
    if require_connected and not is_connected(g):
        raise GraphError("Perron positivity needs a connected graph")
    m = alpha_matrix(g, alpha)
    lam = float(symmetric_eigenvalues(m)[-1])
    x = inverse_iteration(m, lam)
    if x.sum() < 0:
        x = -x
    x /= np.abs(x).max()
    # Rayleigh quotient squares the eigenvector error
    lam = float(x @ m @ x / (x @ x))
    residual = float(np.abs(m @ x - lam * x).max())
    return SpectralResult(lam, x, residual)


def index(g: Graph, alpha: float) -> float:
    """A_alpha-index only; works for disconnected graphs too."""
    _check_alpha(alpha)
    return float(symmetric_eigenvalues(alpha_matrix(g, alpha))[-1])


def batch_index(graphs: Sequence[Graph] | np.ndarray, alpha: float, chunk: int = 8192) -> np.ndarray:
    """Indices of many same-order graphs at once (LAPACK, vectorized)."""
    if len(graphs) == 0:
        return np.zeros(0)
    out = []
    for start in range(0, len(graphs), chunk):
        out.append(np.linalg.eigvalsh(alpha_matrices(graphs[start : start + chunk], alpha))[:, -1])
    return np.concatenate(out)


def star_index(delta: int, alpha: float) -> float:
    """A_alpha-index of the star with ``delta`` leaves."""
    _check_alpha(alpha, allow_one=False)
    if delta < 1:
        raise ValueError("delta must be positive")
    s = alpha * (delta + 1)
    return 0.5 * (s + math.sqrt(s * s + 4 * delta * (1 - 2 * alpha)))


def complete_bipartite_index(a: int, b: int, alpha: float) -> float:
    _check_alpha(alpha)
    if a < 1 or b < 1:
        raise ValueError("both parts must be nonempty")
    n = a + b
    return 0.5 * (alpha * n + math.sqrt((alpha * n) ** 2 + 4 * a * b * (1 - 2 * alpha)))


@dataclass(frozen=True)
class IndexBounds:
    lower: float
    upper: float
    lower_star: float


def index_bounds(g: Graph, alpha: float) -> IndexBounds:
    """Average degree below, the best edge-weighted degree above, and the
    star bound from the maximum degree."""
    _check_alpha(alpha, allow_one=False)
    deg = g.degrees()
    lower = 2 * g.size / g.n
    upper = 0.0
    for u, v in g.edges():
        upper = max(upper, alpha * deg[u] + (1 - alpha) * deg[v], alpha * deg[v] + (1 - alpha) * deg[u])
    delta = max(deg)
    lower_star = star_index(delta, alpha) if delta else 0.0
    return IndexBounds(lower, upper, lower_star)


# -- threshold constants ------------------------------------------------------

def _bisect(f, lo: float, hi: float, tol: float = 1e-12) -> float:
    flo = f(lo)
    if flo * f(hi) > 0:
        raise ValueError("no sign change on the bracket")
    while hi - lo > tol:
        mid = 0.5 * (lo + hi)
        fm = f(mid)
        if (fm < 0) == (flo < 0):
            lo, flo = mid, fm
        else:
            hi = mid
    return 0.5 * (lo + hi)


def threshold_constants(n: int) -> tuple[float, float, float, float]:
    """alpha values at which the snake on ``n`` vertices and the trees
    T(1,2,2), T(1,2,3), T(1,2,4) reach index exactly 2."""
    if n < 4:
        raise ValueError("need n >= 4")
    s1 = 4 / (n + 1 + math.sqrt((n + 1) ** 2 - 16))
    s2 = _bisect(lambda a: 2 * a**3 - 11 * a**2 + 16 * a - 3, 0.0, 1.0)
    s3 = _bisect(lambda a: a**3 - 6 * a**2 + 9 * a - 1, 0.0, 1.0)
    s4 = _bisect(lambda a: 2 * a**3 - 13 * a**2 + 20 * a - 1, 0.0, 1.0)
    return s1, s2, s3, s4


# -- partitions and quotients -------------------------------------------------

def make_partition(g: Graph, classes: Sequence[Sequence[int]]) -> Partition:
    part = tuple(tuple(c) for c in classes)
    flat = [v for c in part for v in c]
    if sorted(flat) != list(range(g.n)) or any(not c for c in part):
        raise GraphError("partition classes must be nonempty, disjoint and cover V")
    return part


def coarsest_equitable(g: Graph, seed: Sequence[Sequence[int]] | None = None) -> Partition:
    """Coarsest equitable refinement of ``seed`` (default: one class).

    Classes are split by neighbour counts until every vertex of a class has
    the same number of neighbours in every class; fragments keep the seed's
    class order, smaller counts first.
    """
    seed = make_partition(g, seed if seed is not None else [range(g.n)])
    cells = [list(c) for c in seed]
    queue = []
    for c in cells:
        mask = 0
        for v in c:
            mask |= 1 << v
        queue.append(mask)
    while queue:
        splitter = queue.pop(0)
        out = []
        for cell in cells:
            counts = [(g.rows[v] & splitter).bit_count() for v in cell]
            groups: dict[int, list[int]] = {}
            for v, c in zip(cell, counts):
                groups.setdefault(c, []).append(v)
            if len(groups) == 1:
                out.append(cell)
                continue
            for c in sorted(groups):
                out.append(groups[c])
                mask = 0
                for v in groups[c]:
                    mask |= 1 << v
                queue.append(mask)
        cells = out
    return tuple(tuple(sorted(c)) for c in cells)


@dataclass(frozen=True)
class QuotientMatrix:
    matrix: np.ndarray
    sizes: tuple[int, ...] | None
    equitable: bool
    # rational entries, kept when the matrix came from a graph
    exact: tuple[tuple[Fraction, ...], ...] | None = None

    @classmethod
    def from_array(cls, matrix, sizes: Sequence[int] | None = None) -> "QuotientMatrix":
        """Wrap a matrix written down by hand, trusting it to be equitable."""
        return cls(np.asarray(matrix, dtype=float), tuple(sizes) if sizes else None, True)


def quotient_matrix(g: Graph, alpha: float, pi: Sequence[Sequence[int]]) -> QuotientMatrix:
    _check_alpha(alpha)
    part = make_partition(g, pi)
    deg = g.degrees()
    masks = []
    for c in part:
        mask = 0
        for v in c:
            mask |= 1 << v
        masks.append(mask)
    a = Fraction(alpha)
    t = len(part)
    q = np.zeros((t, t))
    exact = [[Fraction(0)] * t for _ in range(t)]
    equitable = True
    for i, ci in enumerate(part):
        for j, mj in enumerate(masks):
            sums = []
            for v in ci:
                s = (1 - a) * (g.rows[v] & mj).bit_count()
                if i == j:
                    s += a * deg[v]
                sums.append(s)
            if any(s != sums[0] for s in sums):
                equitable = False
            exact[i][j] = sum(sums) / len(sums)
            q[i, j] = float(exact[i][j])
    return QuotientMatrix(q, tuple(len(c) for c in part), equitable, tuple(map(tuple, exact)))


def largest_eigenvalue_of_quotient(q: QuotientMatrix) -> float:
    """Largest real eigenvalue of an equitable quotient.

    With class sizes known, ``diag(sqrt(size)) Q diag(1/sqrt(size))`` is
    symmetric and goes through the symmetric solver.  Otherwise a shifted
    power iteration is used, valid for nonnegative irreducible matrices.
    """
    if not q.equitable:
        raise ValueError("quotient of a non-equitable partition")
    m = q.matrix
    if q.sizes is not None:
        r = np.sqrt(np.array(q.sizes, dtype=float))
        s = m * r[:, None] / r[None, :]
        return float(symmetric_eigenvalues(0.5 * (s + s.T))[-1])
    return _power_largest(m)


def _power_largest(m: np.ndarray, tol: float = 1e-14, max_iter: int = 200000) -> float:
    if np.any(m < 0):
        raise ValueError("power iteration fallback needs a nonnegative matrix")
    shift = float(np.abs(m).sum(axis=1).max()) + 1.0
    b = m + shift * np.eye(m.shape[0])
    x = np.ones(m.shape[0])
    lam = 0.0
    for _ in range(max_iter):
        y = b @ x
        new = float(y.max())
        y /= new
        if abs(new - lam) <= tol * new and np.abs(y - x).max() <= 1e-13:
            lam = new
            break
        x, lam = y, new
    return lam - shift


def char_poly_eval(q: QuotientMatrix | np.ndarray, x: float, exact: bool = False) -> float:
    """``det(x I - Q)`` by partial-pivoting elimination.

    With ``exact`` the rational entries of a graph-derived quotient are used
    and ``x`` is taken as the exact binary value of the float, so the only
    rounding is the final conversion.  This matters when two large
    determinants are subtracted.
    """
    if exact:
        if not isinstance(q, QuotientMatrix) or q.exact is None:
            raise ValueError("exact evaluation needs a quotient computed from a graph")
        return float(char_poly_exact(q, x))
    m = q.matrix if isinstance(q, QuotientMatrix) else np.asarray(q, dtype=float)
    return determinant(x * np.eye(m.shape[0]) - m)


def char_poly_exact(q: QuotientMatrix, x: float | Fraction) -> Fraction:
    """Exact ``det(x I - Q)`` over the rationals."""
    if q.exact is None:
        raise ValueError("exact evaluation needs a quotient computed from a graph")
    xf = Fraction(x)
    rows = [[(xf if i == j else 0) - v for j, v in enumerate(row)] for i, row in enumerate(q.exact)]
    return _fraction_det(rows)


def _fraction_det(rows: list[list[Fraction]]) -> Fraction:
    n = len(rows)
    det = Fraction(1)
    for k in range(n):
        piv = next((r for r in range(k, n) if rows[r][k] != 0), None)
        if piv is None:
            return Fraction(0)
        if piv != k:
            rows[k], rows[piv] = rows[piv], rows[k]
            det = -det
        det *= rows[k][k]
        for r in range(k + 1, n):
            f = rows[r][k] / rows[k][k]
            if f:
                for c in range(k, n):
                    rows[r][c] -= f * rows[k][c]
    return det
