"""Torus form of the half-exponent inequality and its lower-bound pipeline.

Points x_1..x_M distinct mod 1 carry nearest-neighbor torus gaps d_m and
nonnegative weights tau_m. The torus quadratic form

    (1/3) sum d_m^2 tau_m^2
      + sum_{m != n} d_m^(3/2) d_n^(1/2) tau_m tau_n / sin^2(pi (x_m - x_n))

bounds C3/pi^2 from below for every admissible constant C3 of the line
form; periodizing the points onto the line connects the two sides.

The K-point construction places K coarse points at spacing A plus a
cluster of L+1 points spanning B = 1 - (K+1)A. In the L -> infinity limit
the best weight ratio u gives the closed form

    G_K(A) = (1/2) (1/3 + kappa_0 + sqrt((1/3 - kappa_0)^2 + kappa_1^2)),

so pi^2 G_K(A) is a certified lower bound for the optimal constant.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from ._util import cotpi, parallel_map, sinpi_abs
from .errors import (
    AOutOfRange,
    CotangentPole,
    LengthMismatch,
    NegativeEntry,
    SeparationTooSmall,
)
from .gaps import GapSequence, WeightVector
from .quadforms import q_alpha

SEPARATION_FLOOR = 1e-9
_KAPPA1_FLOOR = 1e-14
_BLOCK = 512


@dataclass(frozen=True, eq=False)
class TrigConfig:
    """Sorted torus points with their gap profile and weights."""

    points: np.ndarray
    gaps: np.ndarray
    weights: np.ndarray

    @property
    def m(self) -> int:
        return self.points.size


@dataclass(frozen=True)
class ConstructionResult:
    """One evaluation of the K-point construction at offset A."""

    k: int
    a: float
    b: float
    kappa0: float
    kappa1: float
    u_star: float
    g_value: float


@dataclass(frozen=True)
class ScanRow:
    k: int
    x: float
    result: ConstructionResult


@dataclass(frozen=True)
class EquivReport:
    line_side: float
    trig_side: float
    gap: float


@dataclass(frozen=True)
class CotLimitReport:
    finite: float
    finite_doubled: float
    closed: float
    gap: float
    gap_doubled: float

    @property
    def shrinks(self) -> bool:
        return abs(self.gap_doubled) < abs(self.gap)


def toroidal_gaps(points_sorted: np.ndarray) -> np.ndarray:
    """Nearest-neighbor torus distance per point; the single-point
    configuration gets the conventional gap 1."""
    m = points_sorted.size
    if m == 1:
        return np.array([1.0])
    diffs = np.diff(points_sorted)
    # same float expression as the canonical torus distance 1 - |x - y|,
    # so recomputation oracles can match bit for bit
    wrap = 1.0 - (points_sorted[-1] - points_sorted[0])
    left = np.concatenate(([wrap], diffs))
    right = np.concatenate((diffs, [wrap]))
    return np.minimum(left, right)


def trig_config(points, weights) -> TrigConfig:
    """Reduce mod 1, sort jointly with the weights, and validate."""
    pts = np.mod(np.asarray(points, dtype=float), 1.0)
    tau = np.asarray(weights, dtype=float)
    if pts.size != tau.size:
        raise LengthMismatch(f"{tau.size} weights for {pts.size} points")
    if pts.size == 0:
        raise ValueError("need at least one point")
    if np.any(tau < 0):
        raise NegativeEntry("weights must be nonnegative")
    order = np.argsort(pts, kind="stable")
    pts, tau = pts[order], tau[order]
    if pts.size > 1:
        sep = min(float(np.min(np.diff(pts))), float(pts[0] + 1.0 - pts[-1]))
        if sep < SEPARATION_FLOOR:
            raise SeparationTooSmall(f"minimal torus separation {sep:.3e} below {SEPARATION_FLOOR:g}")
    gaps = toroidal_gaps(pts)
    for arr in (pts, gaps, tau):
        arr.setflags(write=False)
    return TrigConfig(pts, gaps, tau)


def trig_form_value(cfg: TrigConfig) -> float:
    """Evaluate the torus quadratic form; row blocks keep memory bounded
    and give a fixed summation tree for reproducibility."""
    d, tau, x = cfg.gaps, cfg.weights, cfg.points
    diag = float(np.sum(d ** 2 * tau ** 2)) / 3.0
    row_coeff = d ** 1.5 * tau
    col_coeff = d ** 0.5 * tau
    blocks = []
    for start in range(0, cfg.m, _BLOCK):
        stop = min(cfg.m, start + _BLOCK)
        s2 = sinpi_abs(x[start:stop, None] - x[None, :]) ** 2
        num = np.outer(row_coeff[start:stop], col_coeff)
        for i in range(start, stop):
            s2[i - start, i] = 1.0
            num[i - start, i] = 0.0
        blocks.append(float(np.sum(num / s2)))
    return diag + math.fsum(blocks)


def periodize(cfg: TrigConfig, k_periods: int) -> tuple[GapSequence, WeightVector]:
    """Tile the torus points onto the line: lam_{kM+m} = k + x_m with the
    weights repeated, plus periodic ghost nodes on both ends."""
    if k_periods < 1:
        raise ValueError(f"k_periods must be >= 1, got {k_periods}")
    shifts = np.arange(k_periods, dtype=float)
    body = (shifts[:, None] + cfg.points[None, :]).ravel()
    nodes = np.concatenate(([cfg.points[-1] - 1.0], body, [k_periods + cfg.points[0]]))
    seq = GapSequence(nodes)
    return seq, WeightVector(np.tile(cfg.weights, k_periods))


def periodized_equivalence_check(cfg: TrigConfig, k_periods: int) -> EquivReport:
    """Compare the half-exponent line form on the tiled configuration,
    scaled by 1/(pi^2 K), against the torus form. The gap decays like
    log(K)/K as the number of periods grows."""
    if k_periods < 2:
        raise ValueError(f"k_periods must be >= 2, got {k_periods}")
    seq, t = periodize(cfg, k_periods)
    line_side = q_alpha(seq, t, 0.5) / (math.pi ** 2 * k_periods)
    trig_side = trig_form_value(cfg)
    return EquivReport(line_side, trig_side, line_side - trig_side)


def l_sum(b: float, l: int) -> float:
    """sum_{j=1}^{L} (L+1-j) / sin^2(pi j B / L) for 0 < B < 1."""
    if not 0.0 < b < 1.0:
        raise ValueError(f"B must lie in (0, 1), got {b}")
    if l < 1:
        raise ValueError(f"L must be >= 1, got {l}")
    j = np.arange(1, l + 1, dtype=float)
    return float(np.sum((l + 1 - j) / sinpi_abs(j * b / l) ** 2))


def kappas(k: int, a: float) -> tuple[float, float]:
    """The two construction coefficients at K coarse points, offset A:

        kappa_0 = A^2/3 + (2A^2/K) sum_{j<K} (K-j) / sin^2(pi j A),
        kappa_1 = (2/pi) sqrt(A^3/(B K)) sum_{j<=K} cot(pi j A),

    with B = 1 - (K+1)A required positive.
    """
    if k < 1:
        raise ValueError(f"K must be >= 1, got {k}")
    a = float(a)
    if not 0.0 < a < 1.0 / (k + 1):
        raise AOutOfRange(f"A must lie in (0, 1/{k + 1}), got {a}")
    b = 1.0 - (k + 1) * a
    j_head = np.arange(1, k, dtype=float)
    sines = sinpi_abs(j_head * a)
    if np.any(sines < 1e-12):
        raise CotangentPole("sin(pi k A) vanished; A too close to a small-denominator rational")
    kappa0 = a * a / 3.0
    if k > 1:
        kappa0 += (2.0 * a * a / k) * float(np.sum((k - j_head) / sines ** 2))
    j_full = np.arange(1, k + 1, dtype=float)
    sines_full = sinpi_abs(j_full * a)
    if np.any(sines_full < 1e-12):
        raise CotangentPole("sin(pi k A) vanished; A too close to a small-denominator rational")
    kappa1 = (2.0 / math.pi) * math.sqrt(a ** 3 / (b * k)) * float(np.sum(cotpi(j_full * a)))
    return kappa0, kappa1


def g_of_u(kappa0: float, kappa1: float, u: float) -> float:
    """g(u) = (kappa_0 + kappa_1 u + u^2/3) / (1 + u^2) for u >= 0."""
    if u < 0:
        raise ValueError(f"u must be nonnegative, got {u}")
    return (kappa0 + kappa1 * u + u * u / 3.0) / (1.0 + u * u)


def maximize_g(kappa0: float, kappa1: float) -> tuple[float, float]:
    """Supremum of g over u >= 0 with its maximizer.

    For kappa_1 > 0 the maximizer is
        u0 = (1/kappa_1)(1/3 - kappa_0 + sqrt((1/3 - kappa_0)^2 + kappa_1^2))
    and the value (1/2)(1/3 + kappa_0 + sqrt((1/3 - kappa_0)^2 + kappa_1^2)).
    For kappa_1 <= 0 that closed form would pick a negative u, so the
    supremum over u >= 0 degenerates to max(kappa_0, 1/3), attained at
    u = 0 or in the u -> infinity limit (reported as an inf sentinel).
    """
    if kappa1 > _KAPPA1_FLOOR:
        root = math.sqrt((1.0 / 3.0 - kappa0) ** 2 + kappa1 ** 2)
        return (1.0 / 3.0 - kappa0 + root) / kappa1, 0.5 * (1.0 / 3.0 + kappa0 + root)
    if kappa0 >= 1.0 / 3.0:
        return 0.0, kappa0
    return math.inf, 1.0 / 3.0


def big_g(k: int, a: float) -> ConstructionResult:
    """Evaluate the construction at (K, A) and close the u-optimization."""
    kappa0, kappa1 = kappas(k, a)
    b = 1.0 - (k + 1) * a
    u_star, g_value = maximize_g(kappa0, kappa1)
    return ConstructionResult(k, a, b, kappa0, kappa1, u_star, g_value)


def scan(k_min: int, k_max: int, a_steps: int) -> tuple[list[ScanRow], ScanRow]:
    """Evaluate G_K(x/(K+1)) on the open grid x = i/(a_steps+1).

    Returns all rows ordered by (K, x) plus the argmax row (first one in
    that order on ties).
    """
    if not 1 <= k_min <= k_max:
        raise ValueError(f"need 1 <= k_min <= k_max, got {k_min}, {k_max}")
    if a_steps < 2:
        raise ValueError(f"a_steps must be >= 2, got {a_steps}")

    def rows_for(k: int) -> list[ScanRow]:
        out = []
        for i in range(1, a_steps + 1):
            x = i / (a_steps + 1)
            out.append(ScanRow(k, x, big_g(k, x / (k + 1))))
        return out

    rows = [row for chunk in parallel_map(rows_for, range(k_min, k_max + 1)) for row in chunk]
    best = max(rows, key=lambda row: row.result.g_value)
    return rows, best


def cot_limit_check(k: int, a: float, l: int) -> CotLimitReport:
    """Riemann-sum check of

        (1/L) sum_{j<=K} sum_{i=0..L} 1/sin^2(pi (jA + iB/L))
            -> (2/(pi B)) sum_{j<=K} cot(pi j A),

    reporting the gap at L and 2L.
    """
    if l < 10:
        raise ValueError(f"L must be >= 10, got {l}")
    kappas(k, a)     # validates (k, a)
    b = 1.0 - (k + 1) * a

    def finite(ll: int) -> float:
        offsets = np.arange(ll + 1, dtype=float) * (b / ll)
        total = math.fsum(
            float(np.sum(sinpi_abs(j * a + offsets) ** -2.0))
            for j in range(1, k + 1)
        )
        return total / ll

    closed = (2.0 / (math.pi * b)) * float(np.sum(cotpi(np.arange(1, k + 1, dtype=float) * a)))
    f1, f2 = finite(l), finite(2 * l)
    return CotLimitReport(f1, f2, closed, f1 - closed, f2 - closed)


def construction_config(k: int, a: float, l: int, u: float) -> TrigConfig:
    """The finite (K, A, B, L, u) torus configuration: K coarse points at
    spacing A, then L+1 cluster points at spacing B/L, weighted 1/sqrt(K)
    and u/sqrt(L+1) respectively. Needs L >= B/A so the coarse points keep
    gap A.
    """
    if u < 0:
        raise ValueError(f"u must be nonnegative, got {u}")
    kappas(k, a)     # validates (k, a)
    b = 1.0 - (k + 1) * a
    if l < b / a:
        raise ValueError(f"L must be at least B/A = {b / a:.3f}, got {l}")
    coarse = np.arange(1, k + 1, dtype=float) * a
    cluster = (k + 1) * a + np.arange(l + 1, dtype=float) * (b / l)
    weights = np.concatenate((np.full(k, 1.0 / math.sqrt(k)),
                              np.full(l + 1, u / math.sqrt(l + 1))))
    return trig_config(np.concatenate((coarse, cluster)), weights)
