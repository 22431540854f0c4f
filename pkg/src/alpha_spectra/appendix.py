"""Numeric checks of closed-form determinant identities and sign claims.

Each identity compares a displayed polynomial against ``det(xI - Q)`` for a
quotient matrix computed from the actual graph and partition, never from a
hand-typed matrix.  Inequalities are checked at every sampled point, with
the index taken from a full eigensolve where the claim is about an index.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Callable

import numpy as np

from . import families as fam
from .graph import Graph
from .search import HypothesisError, TheoremVerdict
from .spectral import char_poly_exact, quotient_matrix, spectral_radius

REL_TOL = 1e-6
ABS_FLOOR = 1e-9
# sign claims closer than this to zero are near-ties, not passes
SIGN_TOL = 1e-9
MIN_SAMPLES = 200


# -- partitions matching the constructors' vertex numbering -----------------------

def _pendant_blocks(s: int, t: int, k: int) -> tuple[list[int], list[int], list[int]]:
    base = 5
    return (
        list(range(base, base + s)),
        list(range(base + s, base + s + t)),
        list(range(base + s + t, base + s + t + k)),
    )


def h3_partition(s: int, t: int, k: int) -> list[list[int]]:
    """Eight classes: leaves of v1, leaves of v3, v1, v3, v4, v5, v2, leaves of v2."""
    if min(s, t, k) < 1:
        raise HypothesisError("the eight-class partition needs min(s, t, k) >= 1")
    p1, p2, p3 = _pendant_blocks(s, t, k)
    return [p1, p3, [0], [2], [3], [4], [1], p2]


def h3_symmetric_partition(s: int, t: int) -> list[list[int]]:
    """Five classes of H3(s, t, s): outer leaves, {v1, v3}, {v4, v5}, v2, leaves of v2."""
    if s < 1 or t < 1:
        raise HypothesisError("the five-class partition needs s >= 1 and t >= 1")
    p1, p2, p3 = _pendant_blocks(s, t, s)
    return [p1 + p3, [0, 2], [3, 4], [1], p2]


def f_partition(s: int, t: int) -> list[list[int]]:
    """``K_s - u``, ``u``, ``v``, ``K_t - v`` with ``u = 0`` and ``v = s``."""
    if s < 2 or t < 2:
        raise HypothesisError("the four-class partition needs s, t >= 2")
    return [list(range(1, s)), [0], [s], list(range(s + 1, s + t))]


def _qdet(g: Graph, alpha: float, pi: list[list[int]], x: float) -> Fraction:
    # Exact, so that differences of nearly equal determinants keep their digits.
    q = quotient_matrix(g, alpha, pi)
    if not q.equitable:
        raise AssertionError("partition is not equitable")
    return char_poly_exact(q, x)


# -- closed forms ---------------------------------------------------------------

def h3_det_diff_form(t: int, a: float, x: float) -> float:
    return (1 - a) ** 2 * (1 + (x - 2) * a) ** 2 * (x - 2 * a) * (x - (t + 2) * a)


def h3_tilde_diff_form(m: int, a: float, x: float) -> float:
    cubic = (
        x**3
        + a * (2 + 3 * m + 2 * (2 + m) * x - (4 + m) * x**2)
        - (2 + m) * x
        + a**2 * (2 * m * (x - 3) + 3 * x - 4)
        + a**3 * m
    )
    return (1 + a * (x - 2)) ** 2 * (x - 2 * a) * cubic


def eq31_form(m: int, a: float, x: float) -> float:
    return (1 + a * (x - 2)) * (x - 2 * a) * (1 + m - 2 * a * (1 + m) + a * (2 + m) * x - x**2)


def hat_quintic(m: int, a: float, x: float) -> float:
    c4 = -2 * a * (2 + m)
    c3 = 4 * a**2 - 2 * m + 4 * a * m + 6 * a**2 * m + a**2 * m**2
    c2 = (
        -5 * a + 10 * a**2 - 3 * a**3 + 6 * a * m - 12 * a**2 * m - 4 * a**3 * m
        + 2 * a * m**2 - 4 * a**2 * m**2 - 2 * a**3 * m**2
    )
    c1 = (
        -3 + 12 * a - 8 * a**2 - 8 * a**3 + 2 * a**4 - a**2 * m + 2 * a**3 * m
        + 3 * a**4 * m + m**2 - 4 * a * m**2 + 8 * a**3 * m**2
    )
    c0 = (
        (-2 * a + 8 * a**2 - 8 * a**3) * m**2
        + (3 * a - 12 * a**2 + 15 * a**3 - 6 * a**4) * m
        - 2 * a**4 + 13 * a**3 - 12 * a**2 + 3 * a
    )
    return x**5 + c4 * x**4 + c3 * x**3 + c2 * x**2 + c1 * x + c0


def hat_f(m: int, a: float) -> float:
    return (
        -2 * m * a**4
        + (6 * m**3 - 16 * m**2 + 15 * m) * a**3
        - (5 * m**3 - 22 * m**2 + 22 * m + 2) * a**2
        + (m**3 - 9 * m**2 + 11 * m + 4) * a
        + m**2
        - 2 * (m + 1)
    )


def f_quartic(t: int, a: float, x: float) -> float:
    c3 = -(2 * a * t + 2 * t + 3 * a - 3)
    c2 = (a**2 + 4 * a + 1) * t**2 + (3 * a**2 + 2 * a - 5) * t + 3 * a**2 - 6 * a + 2
    c1 = -(
        2 * a * (a + 1) * t**3
        + (5 * a**2 - 3 * a - 2) * t**2
        + (2 * a**3 - a**2 - 5 * a + 2) * t
        + a**3 - a**2 - 2 * a + 2
    )
    c0 = (
        a**2 * t**4 + 2 * a * (a - 1) * t**3 + (2 * a**3 - 4 * a**2 + a) * t**2
        + (a**2 - 3 * a + 2) * t + 2 * a * (a**2 - 3 * a + 3) - 2
    )
    return x**4 + c3 * x**3 + c2 * x**2 + c1 * x + c0


def f_quarter_h(t: int, a: float) -> float:
    return (
        80 * (a - 1) ** 2 * t**2
        - 8 * a * (6 * a * (8 * a - 21) + 103) * t
        + 200 * t
        + 4 * a * (4 * a * (28 * a - 89) + 389)
        - 595
    )


def eq44_form(t: int, a: float) -> float:
    return (1 - a) * (a * (3 + 2 * a * (t - 1) - 2 * t) - 3)


def eq42_form(s: int, t: int, a: float) -> float:
    inner = (
        a**3 * (5 + 3 * t + s * (3 + t))
        + a**2 * (s * (t**2 - 2 * t - 11) + 3 * (t**2 + t + 2) - s**2 * (t + 3))
        + a * (s**3 + 6 * s**2 - s * (t**2 + 4 * t + 1) - (t - 3) * t - 12)
        + s * (1 + s) * (t - s)
        + 4 * s
        - 4 * t
        + 6
    )
    return t - 1 - s + a * inner


def eq43_form(s: int, t: int, a: float) -> float:
    return (a - 1) ** 2 * (s - 1) * ((s - 1) * (1 - s + t) + a**2 * (t - 1) + a * (s - t - 2) * (t - 1))


# -- identity table ---------------------------------------------------------------

@dataclass(frozen=True)
class Check:
    name: str
    kind: str  # "eq": lhs == rhs; "lt": lhs < rhs
    lhs: float
    rhs: float

    def __post_init__(self) -> None:
        # determinants arrive as exact fractions
        object.__setattr__(self, "lhs", float(self.lhs))
        object.__setattr__(self, "rhs", float(self.rhs))

    def ok(self) -> bool:
        if self.kind == "eq":
            return abs(self.lhs - self.rhs) <= REL_TOL * max(abs(self.lhs), abs(self.rhs)) + ABS_FLOOR
        return self.lhs < self.rhs - SIGN_TOL

    def near_tie(self) -> bool:
        return self.kind == "lt" and not self.ok() and abs(self.lhs - self.rhs) <= SIGN_TOL

    def rel_err(self) -> float:
        if self.kind != "eq":
            return 0.0
        return abs(self.lhs - self.rhs) / max(abs(self.lhs), abs(self.rhs), 1.0)


@dataclass(frozen=True)
class Identity:
    hypothesis: str
    sample: Callable[[np.random.Generator], dict]
    violates: Callable[[dict], str | None]
    evaluate: Callable[[dict], list[Check]]


def _h3_det_diff(p: dict) -> list[Check]:
    t, a, x = p["t"], p["alpha"], p["x"]
    g1, g2 = fam.h_family(3, t + 1, t - 1, t + 1), fam.h_family(3, t + 1, t, t)
    d = _qdet(g1, a, h3_partition(t + 1, t - 1, t + 1), x) - _qdet(g2, a, h3_partition(t + 1, t, t), x)
    form = h3_det_diff_form(t, Fraction(a), Fraction(x))
    return [Check("difference", "eq", d, form), Check("positive", "lt", 0.0, d)]


def _h3_tilde_diff(p: dict) -> list[Check]:
    # The sign is checked at the index of the balanced graph only: just
    # above that index the difference turns positive inside the interval.
    m, a, x = p["m"], p["alpha"], p["x"]
    tilde, hat = fam.h_family(3, m, m - 2, m - 1), fam.h_family(3, m, m - 3, m)
    d = _qdet(tilde, a, h3_partition(m, m - 2, m - 1), x) - _qdet(hat, a, h3_partition(m, m - 3, m), x)
    lam = spectral_radius(hat, a).lam
    return [
        Check("difference", "eq", d, h3_tilde_diff_form(m, Fraction(a), Fraction(x))),
        Check("negative at the index", "lt", h3_tilde_diff_form(m, Fraction(a), Fraction(lam)), 0.0),
    ]


def _eq31(p: dict) -> list[Check]:
    m, a, x = p["m"], p["alpha"], p["x"]
    prime, hat = fam.h_family(3, m - 1, m - 1, m - 1), fam.h_family(3, m, m - 3, m)
    d = _qdet(prime, a, h3_symmetric_partition(m - 1, m - 1), x) - _qdet(hat, a, h3_symmetric_partition(m, m - 3), x)
    checks = [Check("difference", "eq", d, eq31_form(m, a, x))]
    lam = spectral_radius(hat, a).lam
    checks.append(Check("negative at the index", "lt", eq31_form(m, a, lam), 0.0))
    return checks


def _claim_c1(p: dict) -> list[Check]:
    m, a, x = p["m"], p["alpha"], p["x"]
    hat = fam.h_family(3, m, m - 3, m)
    lam = spectral_radius(hat, a).lam
    checks = [
        Check("lower bound", "lt", a * (m + 1), lam),
        Check("upper bound", "lt", lam, a * m + 1),
    ]
    if m >= 4:
        pi = h3_symmetric_partition(m, m - 3)
        checks.append(Check("quintic", "eq", _qdet(hat, a, pi, x), hat_quintic(m, a, x)))
        checks.append(Check("value at alpha*m+1", "eq", _qdet(hat, a, pi, a * m + 1), (1 - a) * hat_f(m, a)))
    return checks


def _claim_c3(p: dict) -> list[Check]:
    t, a, x = p["t"], p["alpha"], p["x"]
    g = fam.f_family(t, t + 1)
    pi = f_partition(t, t + 1)
    return [
        Check("quartic", "eq", _qdet(g, a, pi, x), f_quartic(t, a, x)),
        Check("value at t+1/4", "eq", _qdet(g, a, pi, t + 0.25), f_quarter_h(t, a) / 256),
        Check("index below t+1/4", "lt", spectral_radius(g, a).lam, t + 0.25),
    ]


def _eq44(p: dict) -> list[Check]:
    t, a = p["t"], p["alpha"]
    g = fam.f_family(t + 2, t)
    d = _qdet(g, a, f_partition(t + 2, t), t + 1)
    return [Check("determinant", "eq", d, eq44_form(t, a)), Check("negative", "lt", d, 0.0)]


def _eq42(p: dict) -> list[Check]:
    s, t, a = p["s"], p["t"], p["alpha"]
    d = _qdet(fam.f_family(s, t), a, f_partition(s, t), s - 1 - a)
    return [Check("determinant", "eq", d, eq42_form(s, t, a)), Check("negative", "lt", d, 0.0)]


def _eq43(p: dict) -> list[Check]:
    s, t, a = p["s"], p["t"], p["alpha"]
    d = _qdet(fam.f_family(s, t), a, f_partition(s, t), s - 2 + a)
    return [Check("determinant", "eq", d, eq43_form(s, t, a)), Check("negative", "lt", d, 0.0)]


def _need(cond: bool, msg: str) -> str | None:
    return None if cond else msg


def _int(p: dict, name: str) -> int:
    v = p[name]
    if int(v) != v:
        raise HypothesisError(f"{name} must be an integer")
    return int(v)


def _s_h3_det_diff(r: np.random.Generator) -> dict:
    t, a = int(r.integers(2, 9)), float(r.uniform(0.5, 1.0))
    return {"t": t, "alpha": a, "x": a * (t + 2) + float(r.uniform(1e-3, 3 * t + 3))}


def _s_h3_tilde_diff(r: np.random.Generator) -> dict:
    m, a = int(r.integers(4, 11)), float(r.uniform(0.55, 1.0))
    return {"m": m, "alpha": a, "x": float(r.uniform(a * (m + 1), a * m + 1))}


def _s_hat(lo_m: int) -> Callable[[np.random.Generator], dict]:
    def sample(r: np.random.Generator) -> dict:
        m, a = int(r.integers(lo_m, 11)), float(r.uniform(0.55, 1.0))
        return {"m": m, "alpha": a, "x": float(r.uniform(0.0, a * m + 3))}

    return sample


def _s_claim_c3(r: np.random.Generator) -> dict:
    t, a = int(r.integers(5, 13)), float(r.uniform(0.0, 0.75))
    return {"t": t, "alpha": a, "x": float(r.uniform(0.0, t + 2))}


def _s_eq44(r: np.random.Generator) -> dict:
    return {"t": int(r.integers(5, 21)), "alpha": float(r.uniform(0.0, 0.75))}


def _s_unbalanced(lo: float, hi: float) -> Callable[[np.random.Generator], dict]:
    def sample(r: np.random.Generator) -> dict:
        t = int(r.integers(2, 10))
        return {"s": t + int(r.integers(3, 12)), "t": t, "alpha": float(r.uniform(lo, hi))}

    return sample


def _v_h3_det_diff(p: dict) -> str | None:
    ok = _int(p, "t") >= 2 and 0.5 <= p["alpha"] < 1 and p["x"] > p["alpha"] * (p["t"] + 2)
    return _need(ok, "needs t >= 2, alpha in [1/2, 1) and x > alpha (t + 2)")


def _v_h3_tilde_diff(p: dict) -> str | None:
    a, m = p["alpha"], _int(p, "m")
    ok = m >= 4 and 0.55 <= a < 1 and a * (m + 1) < p["x"] < a * m + 1
    return _need(ok, "needs m >= 4, alpha in [11/20, 1) and alpha (m + 1) < x < alpha m + 1")


def _v_hat(lo_m: int) -> Callable[[dict], str | None]:
    return lambda p: _need(_int(p, "m") >= lo_m and 0.55 <= p["alpha"] < 1, f"needs m >= {lo_m} and alpha in [11/20, 1)")


def _v_f_balanced(p: dict) -> str | None:
    return _need(_int(p, "t") >= 5 and 0 <= p["alpha"] <= 0.75, "needs t >= 5 and alpha in [0, 3/4]")


def _v_unbalanced(lo: float, hi: float, text: str) -> Callable[[dict], str | None]:
    def violates(p: dict) -> str | None:
        ok = _int(p, "t") >= 2 and _int(p, "s") >= p["t"] + 3 and lo <= p["alpha"] <= hi
        return _need(ok, f"needs t >= 2, s >= t + 3 and alpha in {text}")

    return violates


IDENTITIES: dict[str, Identity] = {
    "h3-det-diff": Identity("t >= 2, alpha in [1/2, 1), x > alpha (t + 2)", _s_h3_det_diff, _v_h3_det_diff, _h3_det_diff),
    "h3-tilde-diff": Identity(
        "m >= 4, alpha in [11/20, 1), alpha (m + 1) < x < alpha m + 1", _s_h3_tilde_diff, _v_h3_tilde_diff, _h3_tilde_diff
    ),
    "eq3.1": Identity("m >= 4, alpha in [11/20, 1), any x", _s_hat(4), _v_hat(4), _eq31),
    "claim-c1": Identity(
        "m >= 3, alpha in [11/20, 1); the quintic is compared for m >= 4", _s_hat(3), _v_hat(3), _claim_c1
    ),
    "claim-c3": Identity("t >= 5, alpha in [0, 3/4], any x", _s_claim_c3, _v_f_balanced, _claim_c3),
    "eq4.4": Identity("t >= 5, alpha in [0, 3/4]", _s_eq44, _v_f_balanced, _eq44),
    "eq4.2": Identity(
        "t >= 2, s >= t + 3, alpha in [0, 1/2]", _s_unbalanced(0.0, 0.5), _v_unbalanced(0.0, 0.5, "[0, 1/2]"), _eq42
    ),
    "eq4.3": Identity(
        "t >= 2, s >= t + 3, alpha in [1/2, 3/4]", _s_unbalanced(0.5, 0.75), _v_unbalanced(0.5, 0.75, "[1/2, 3/4]"), _eq43
    ),
}


def _fmt(p: dict) -> str:
    return ",".join(f"{k}={v:.6g}" if isinstance(v, float) else f"{k}={v}" for k, v in p.items())


def appendix_check(
    identity_id: str,
    samples: int = MIN_SAMPLES,
    seed: int = 0,
    points: list[dict] | None = None,
) -> TheoremVerdict:
    """Check one identity or sign claim at random in-hypothesis points, or at
    the given ``points`` (which must satisfy the hypotheses)."""
    if identity_id not in IDENTITIES:
        raise HypothesisError(f"unknown identity {identity_id!r}; known: {', '.join(IDENTITIES)}")
    spec = IDENTITIES[identity_id]
    if points is None:
        if samples < 1:
            raise HypothesisError("samples must be positive")
        rng = np.random.default_rng(seed)
        points = [spec.sample(rng) for _ in range(samples)]
    for p in points:
        why = spec.violates(p)
        if why:
            raise HypothesisError(f"{identity_id}: point {_fmt(p)} {why}")
    witnesses = []
    ties = []
    worst = 0.0
    compared = 0
    for p in points:
        for c in spec.evaluate(p):
            if c.kind == "eq":
                compared += 1
                worst = max(worst, c.rel_err())
            if c.near_tie():
                ties.append(f"{_fmt(p)}: {c.name} within {SIGN_TOL:g} of zero")
            elif not c.ok():
                witnesses.append(f"{_fmt(p)}: {c.name} lhs={c.lhs!r} rhs={c.rhs!r}")
    notes = (
        f"{len(points)} points; {compared} equality comparisons; max relative error {worst:.3e}",
        f"hypothesis: {spec.hypothesis}",
    ) + tuple(ties)
    grid = f"{identity_id}: {len(points)} points, seed {seed}"
    status = "fail" if witnesses else ("tie-flagged" if ties else "pass")
    return TheoremVerdict(identity_id, grid, status, tuple(witnesses), (), notes)


APPENDIX_IDS = tuple(IDENTITIES)
