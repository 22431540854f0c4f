"""Dense linear algebra for small symmetric matrices.

Householder reduction to tridiagonal form followed by implicit-shift QL
gives the eigenvalues; inverse iteration recovers the eigenvector for a
chosen eigenvalue.  Matrices here are at most 64 x 64.
"""
from __future__ import annotations

import math

import numpy as np


class ConvergenceError(ArithmeticError):
    pass


def tridiagonalize(a: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    """Return ``(diag, offdiag)`` of a tridiagonal matrix similar to symmetric ``a``.

    ``offdiag[k]`` couples rows ``k`` and ``k + 1``; ``offdiag[-1]`` is zero.
    """
    a = np.array(a, dtype=float, copy=True)
    n = a.shape[0]
    off = np.zeros(n)
    for k in range(n - 2):
        x = a[k + 1 :, k].copy()
        norm_x = math.sqrt(float(x @ x))
        if norm_x == 0.0:
            continue
        alpha = -norm_x if x[0] >= 0 else norm_x
        v = x
        v[0] -= alpha
        norm_v = math.sqrt(float(v @ v))
        if norm_v == 0.0:
            off[k] = a[k + 1, k]
            continue
        v /= norm_v
        sub = a[k + 1 :, k + 1 :]
        p = sub @ v
        w = 2.0 * (p - float(v @ p) * v)
        sub -= np.outer(v, w) + np.outer(w, v)
        off[k] = alpha
        a[k + 1 :, k] = 0.0
        a[k, k + 1 :] = 0.0
    if n >= 2:
        off[n - 2] = a[n - 1, n - 2]
    return np.diag(a).copy(), off


def tridiagonal_eigenvalues(d: np.ndarray, e: np.ndarray, tol: float = 1e-12, max_iter: int = 60) -> np.ndarray:
    """Implicit-shift QL on a symmetric tridiagonal matrix; returns ascending eigenvalues."""
    d = np.array(d, dtype=float, copy=True)
    e = np.array(e, dtype=float, copy=True)
    n = d.size
    # machine precision decides deflation when it is stricter than ``tol``
    eps = min(tol, np.finfo(float).eps)
    for l in range(n):
        it = 0
        while True:
            m = l
            while m < n - 1:
                dd = abs(d[m]) + abs(d[m + 1])
                if abs(e[m]) <= eps * dd or abs(e[m]) < 1e-300:
                    break
                m += 1
            if m == l:
                break
            it += 1
            if it > max_iter:
                raise ConvergenceError("QL iteration did not converge")
            g = (d[l + 1] - d[l]) / (2.0 * e[l])
            r = math.hypot(g, 1.0)
            g = d[m] - d[l] + e[l] / (g + math.copysign(r, g))
            s = c = 1.0
            p = 0.0
            i = m - 1
            underflow = False
            while i >= l:
                f = s * e[i]
                b = c * e[i]
                r = math.hypot(f, g)
                e[i + 1] = r
                if r == 0.0:
                    d[i + 1] -= p
                    e[m] = 0.0
                    underflow = True
                    break
                s = f / r
                c = g / r
                g = d[i + 1] - p
                r = (d[i] - g) * s + 2.0 * c * b
                p = s * r
                d[i + 1] = g + p
                g = c * r - b
                i -= 1
            if underflow:
                continue
            d[l] -= p
            e[l] = g
            e[m] = 0.0
    return np.sort(d)


def symmetric_eigenvalues(a: np.ndarray, tol: float = 1e-12) -> np.ndarray:
    a = np.asarray(a, dtype=float)
    if a.shape[0] == 1:
        return np.array([a[0, 0]])
    d, e = tridiagonalize(a)
    return tridiagonal_eigenvalues(d, e, tol=tol)


def lu_factor(a: np.ndarray) -> tuple[np.ndarray, list[int], int]:
    """Partial-pivoting LU in place on a copy; returns ``(lu, perm, swaps)``."""
    lu = np.array(a, dtype=float, copy=True)
    n = lu.shape[0]
    perm = list(range(n))
    swaps = 0
    for k in range(n):
        piv = k + int(np.argmax(np.abs(lu[k:, k])))
        if piv != k:
            lu[[k, piv]] = lu[[piv, k]]
            perm[k], perm[piv] = perm[piv], perm[k]
            swaps += 1
        if lu[k, k] == 0.0:
            continue
        lu[k + 1 :, k] /= lu[k, k]
        lu[k + 1 :, k + 1 :] -= np.outer(lu[k + 1 :, k], lu[k, k + 1 :])
    return lu, perm, swaps


def determinant(a: np.ndarray) -> float:
    lu, _, swaps = lu_factor(a)
    det = float(np.prod(np.diag(lu)))
    return -det if swaps % 2 else det


def lu_solve(lu: np.ndarray, perm: list[int], b: np.ndarray) -> np.ndarray:
    n = lu.shape[0]
    y = np.asarray(b, dtype=float)[perm].copy()
    for i in range(n):
        y[i] -= lu[i, :i] @ y[:i]
    for i in range(n - 1, -1, -1):
        y[i] = (y[i] - lu[i, i + 1 :] @ y[i + 1 :]) / lu[i, i]
    return y


def inverse_iteration(a: np.ndarray, lam: float, steps: int = 3) -> np.ndarray:
    """Eigenvector of symmetric ``a`` for the eigenvalue nearest ``lam``."""
    a = np.asarray(a, dtype=float)
    n = a.shape[0]
    scale = max(1.0, float(np.abs(a).sum(axis=1).max()))
    shifted = a - (lam + 1e-10 * scale) * np.eye(n)
    lu, perm, _ = lu_factor(shifted)
    tiny = np.finfo(float).eps * scale
    diag = np.diag(lu).copy()
    diag[np.abs(diag) < tiny] = tiny
    np.fill_diagonal(lu, diag)
    x = np.ones(n)
    for _ in range(steps):
        x = lu_solve(lu, perm, x)
        x /= np.abs(x).max()
    return x
