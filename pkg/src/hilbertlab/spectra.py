"""Skew-symmetric weighted Hilbert matrices and their spectral bounds.

H has entries c_m c_n / (lam_m - lam_n) off the diagonal, zero on it.
Purely imaginary eigenvalues i*mu come in conjugate pairs; the spectral
radius equals the numerical radius, so |mu_max| bounds the bilinear form
over all complex vectors. Complex eigenvectors are carried as real pairs
(u_re, u_im), which is lossless for real skew-symmetric matrices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import LengthMismatch, NonpositiveWeight, ZeroSpectrum
from .gaps import GapSequence
from .quadforms import _top_eigenpair_sym
from .reports import CheckReport

PI2_OVER_3 = math.pi ** 2 / 3.0


@dataclass(frozen=True, eq=False)
class SkewHilbertMatrix:
    entries: np.ndarray
    weights: np.ndarray
    source: GapSequence

    @property
    def n(self) -> int:
        return self.weights.size


@dataclass(frozen=True, eq=False)
class ComplexEigenpair:
    """Eigenpair (i*mu, u_re + i*u_im) of a skew matrix, mu > 0, unit norm."""

    mu: float
    u_re: np.ndarray
    u_im: np.ndarray

    @property
    def abs2(self) -> np.ndarray:
        return self.u_re ** 2 + self.u_im ** 2


@dataclass(frozen=True)
class ChainConstants:
    """Constants of the quadratic-inequality chain U^2 <= V(sV + tU)."""

    s_coeff: float
    t_coeff: float
    c3_upper: float
    c1_upper: float


def build_h(seq: GapSequence, weights=None) -> SkewHilbertMatrix:
    """Assemble H; default weights are c_n = sqrt(delta_n).

    The strict upper triangle is built once and mirrored by negation, so
    skew-symmetry holds exactly.
    """
    if weights is None:
        c = np.sqrt(seq.deltas)
    else:
        c = np.asarray(weights, dtype=float)
        if c.size != seq.n:
            raise LengthMismatch(f"{c.size} weights for {seq.n} active nodes")
        if np.any(c <= 0):
            raise NonpositiveWeight("weights must be strictly positive")
    lam = seq.active
    diff = lam[:, None] - lam[None, :]
    np.fill_diagonal(diff, 1.0)
    full = np.outer(c, c) / diff
    upper = np.triu(full, k=1)
    entries = upper - upper.T
    entries.setflags(write=False)
    c = c.copy()
    c.setflags(write=False)
    return SkewHilbertMatrix(entries, c, seq)


def _gram_top(h: SkewHilbertMatrix) -> tuple[float, np.ndarray]:
    gram = h.entries.T @ h.entries
    gram = (gram + gram.T) / 2.0
    return _top_eigenpair_sym(gram)


def spectral_radius(h: SkewHilbertMatrix) -> float:
    """|mu_max| = sqrt(top eigenvalue of H^T H)."""
    if h.n == 1:
        return 0.0
    value, _ = _gram_top(h)
    return math.sqrt(max(value, 0.0))


def eigenpair_top(h: SkewHilbertMatrix) -> ComplexEigenpair:
    """Top-modulus eigenpair, built from the Gram eigenvector v:

    u = v - (i/mu) H v satisfies H u = i mu u whenever H^T H v = mu^2 v.
    """
    if h.n == 1:
        raise ZeroSpectrum("1x1 skew matrix has only the zero eigenvalue")
    value, v = _gram_top(h)
    mu = math.sqrt(max(value, 0.0))
    if mu <= 0.0:
        raise ZeroSpectrum("all eigenvalues vanish")
    u_re = v
    u_im = -(h.entries @ v) / mu
    norm = math.sqrt(float(u_re @ u_re + u_im @ u_im))
    return ComplexEigenpair(mu, u_re / norm, u_im / norm)


def pair_residual(h: SkewHilbertMatrix, pair: ComplexEigenpair) -> float:
    """max norm defect of H u_re = -mu u_im and H u_im = mu u_re."""
    r1 = np.linalg.norm(h.entries @ pair.u_re + pair.mu * pair.u_im)
    r2 = np.linalg.norm(h.entries @ pair.u_im - pair.mu * pair.u_re)
    return float(max(r1, r2))


@dataclass(frozen=True)
class SelbergReport:
    """Componentwise defect of the eigenvector identity."""

    mu: float
    residuals: np.ndarray
    max_abs_residual: float

    @property
    def max_rel_residual(self) -> float:
        return self.max_abs_residual / self.mu ** 2


def check_selberg_identity(h: SkewHilbertMatrix, pair: ComplexEigenpair) -> SelbergReport:
    """Verify, for every m,

        mu^2 |u_m|^2 = sum_{n != m} c_m^2 c_n^2 |u_n|^2 / (lam_m-lam_n)^2
                     + 2 sum_{n != m} c_m^3 c_n Re(conj(u_m) u_n) / (lam_m-lam_n)^2.
    """
    lam = h.source.active
    c = h.weights
    diff = lam[:, None] - lam[None, :]
    np.fill_diagonal(diff, 1.0)
    inv2 = diff ** -2.0
    np.fill_diagonal(inv2, 0.0)
    abs2 = pair.abs2
    quad = np.outer(c ** 2, c ** 2) * inv2
    cross_kernel = np.outer(c ** 3, c) * inv2
    rhs = quad @ abs2
    rhs += 2.0 * (pair.u_re * (cross_kernel @ pair.u_re) + pair.u_im * (cross_kernel @ pair.u_im))
    lhs = pair.mu ** 2 * abs2
    residuals = np.abs(lhs - rhs)
    return SelbergReport(pair.mu, residuals, float(np.max(residuals)))


def two_forms_bound(c3: float) -> float:
    """The weighted-inequality constant implied by a positive-form constant:
    sqrt(pi^2/3 + 2*c3)."""
    if c3 < 0:
        raise ValueError(f"c3 must be nonnegative, got {c3}")
    return math.sqrt(PI2_OVER_3 + 2.0 * c3)


def preissmann_chain() -> ChainConstants:
    """Solve U^2 <= V((pi^4/45)V + (2 pi^2/3)U) for the best U/V ratio.

    c3_upper is the positive root of x^2 - t*x - s = 0 with s = pi^4/45
    and t = 2 pi^2/3, and c1_upper the constant it implies.
    """
    s = math.pi ** 4 / 45.0
    t = 2.0 * math.pi ** 2 / 3.0
    c3 = (t + math.sqrt(t * t + 4.0 * s)) / 2.0
    return ChainConstants(s, t, c3, two_forms_bound(c3))


def bilinear_form(h: SkewHilbertMatrix, z_re, z_im) -> float:
    """|sum_{m != n} c_m c_n z_m conj(z_n) / (lam_m - lam_n)|.

    For skew H the symmetric part cancels, leaving |2 * z_im^T H z_re|.
    """
    z_re = np.asarray(z_re, dtype=float)
    z_im = np.asarray(z_im, dtype=float)
    if z_re.size != h.n or z_im.size != h.n:
        raise LengthMismatch("vector parts must match the matrix size")
    return abs(2.0 * float(z_im @ (h.entries @ z_re)))


def numerical_radius_check(h: SkewHilbertMatrix, z_re=None, z_im=None,
                           trials: int = 0, seed: int = 0,
                           tol: float = 1e-9) -> list[CheckReport]:
    """Check |B(z)| <= rho * sum |z_n|^2 and its c_n-normalized variant.

    Runs on the explicit vector when given, plus `trials` seeded random
    complex vectors.
    """
    rho = spectral_radius(h)
    vectors = []
    if z_re is not None or z_im is not None:
        zr = np.zeros(h.n) if z_re is None else np.asarray(z_re, dtype=float)
        zi = np.zeros(h.n) if z_im is None else np.asarray(z_im, dtype=float)
        vectors.append((zr, zi, seed))
    rng = np.random.default_rng(seed)
    for k in range(trials):
        vectors.append((rng.standard_normal(h.n), rng.standard_normal(h.n), seed + k))
    reports = []
    for zr, zi, s in vectors:
        lhs = bilinear_form(h, zr, zi)
        rhs = rho * float(zr @ zr + zi @ zi)
        reports.append(CheckReport("numerical-radius", lhs, rhs,
                                   lhs <= rhs + tol * (1.0 + rhs), seed=s))
        wr, wi = zr / h.weights, zi / h.weights
        lhs2 = bilinear_form(h, wr, wi)
        rhs2 = rho * float(wr @ wr + wi @ wi)
        reports.append(CheckReport("numerical-radius-normalized", lhs2, rhs2,
                                   lhs2 <= rhs2 + tol * (1.0 + rhs2), seed=s))
    return reports


def s_and_t(h: SkewHilbertMatrix, pair: ComplexEigenpair) -> tuple[float, float]:
    """The diagonal and rearranged parts of the eigenvector identity sum:

        S = sum_{m != n} delta_m delta_n |u_n|^2 / (lam_m - lam_n)^2,
        T = sum_{m != n} delta_m^(3/2) delta_n^(1/2) |u_m||u_n| / (lam_m - lam_n)^2,

    computed from the source gaps regardless of the matrix weights.
    """
    lam = h.source.active
    delta = h.source.deltas
    diff = lam[:, None] - lam[None, :]
    np.fill_diagonal(diff, 1.0)
    inv2 = diff ** -2.0
    np.fill_diagonal(inv2, 0.0)
    abs_u = np.sqrt(pair.abs2)
    s_val = float(np.sum((inv2 @ delta) * (delta * pair.abs2)))
    t_val = float((delta ** 1.5 * abs_u) @ (inv2 @ (delta ** 0.5 * abs_u)))
    return s_val, t_val
