"""Seeded verification sweeps behind `verify`; each returns sweep records.

Every record carries the same keys: lemma, seed, lhs, rhs, holds,
tail_bound. Sweeps are deterministic given (trials, max_n, seed, tol).
"""
from __future__ import annotations

import math

import numpy as np

from ._util import parallel_map
from .gaps import GapSequence, generate_cluster, generate_random, generate_uniform, new_gap_sequence
from .lowerbound import (
    big_g,
    construction_config,
    cot_limit_check,
    kappas,
    l_sum,
    periodized_equivalence_check,
    scan,
    toroidal_gaps,
    trig_config,
    trig_form_value,
)
from .quadforms import cluster_lower_bound, estimate_constant, q_alpha
from .reports import CheckReport
from .spacing import (
    check_equidistance,
    check_fn_upper,
    check_smoothing_monovariant,
    pair_spacing_sum,
    power_weight,
    shan_split,
    spacing_bound_report,
    spacing_sum,
    zeta,
)
from .spectra import (
    build_h,
    check_selberg_identity,
    eigenpair_top,
    numerical_radius_check,
    preissmann_chain,
    s_and_t,
    spectral_radius,
    two_forms_bound,
)

PI2_OVER_3 = math.pi ** 2 / 3.0
SIGMAS = (1.5, 2.0, 3.0, 4.0)


def _rec(lemma, lhs, rhs, holds, seed=0, tail=0.0) -> dict:
    return CheckReport(lemma, float(lhs), float(rhs), bool(holds),
                       tail_bound=float(tail), seed=int(seed)).record()


def _random_seq(seed: int, max_n: int, min_n: int = 3) -> GapSequence:
    rng = np.random.default_rng(seed)
    n = int(rng.integers(min_n, max_n + 1))
    min_gap = float(rng.uniform(0.05, 1.0))
    return generate_random(n, min_gap, seed)


def suite_selberg(trials: int = 100, max_n: int = 12, seed: int = 0,
                  tol: float = 1e-8) -> list[dict]:
    """Eigenvector identity residuals on random windows and weights."""
    def one(i: int) -> dict:
        s = seed + i
        rng = np.random.default_rng(s)
        n = int(rng.integers(2, max_n + 1))
        seq = generate_random(n, float(rng.uniform(0.05, 1.0)), s)
        weights = rng.uniform(0.5, 2.0, n)
        h = build_h(seq, weights)
        rep = check_selberg_identity(h, eigenpair_top(h))
        return _rec("selberg-identity", rep.max_rel_residual, tol,
                    rep.max_rel_residual < tol, seed=s)

    return parallel_map(one, range(trials))


def suite_spacing(trials: int = 100, max_n: int = 40, seed: int = 0,
                  tol: float = 1e-12) -> list[dict]:
    """Spacing bound, equidistance, smoothing and series-cap sweeps."""
    records: list[dict] = []

    def spacing_case(i: int) -> list[dict]:
        s = seed + i
        seq = _random_seq(s, max_n)
        rng = np.random.default_rng(s + 10**6)
        ell = int(rng.integers(1, seq.n + 1))
        return [spacing_bound_report(seq, ell, sigma, tol=tol, seed=s)
                .record() | {"lemma": f"preissmann-spacing-sigma{sigma:g}"}
                for sigma in SIGMAS]

    for chunk in parallel_map(spacing_case, range(trials)):
        records.extend(chunk)

    # unit spacing saturates the bound: truncation at 10^6 terms per side
    # sits within 3e-6 of pi^2/3
    window = 10**6
    useq = generate_uniform(2 * window + 1, 1.0)
    uval = spacing_sum(useq, window + 1, 2.0, window)
    records.append(_rec("spacing-uniform-window", abs(uval - PI2_OVER_3), 3e-6,
                        abs(uval - PI2_OVER_3) < 3e-6, seed=seed, tail=2.0 / window))

    f3 = power_weight(3.0)
    f2 = power_weight(2.0)

    def other_cases(i: int) -> list[dict]:
        s = seed + i
        rng = np.random.default_rng(s + 2 * 10**6)
        out = []
        a = rng.uniform(1.0, 5.0, int(rng.integers(2, 31)))
        out.append(check_equidistance(a, f3, tol=tol, seed=s).record())
        a2 = rng.uniform(1.0, 5.0, int(rng.integers(3, 31)))
        if not a2[0] > a2[1]:
            a2[0], a2[1] = a2[1] + 0.5, a2[0]
        eps = float(rng.uniform(0.05, 1.0)) * (a2[0] - a2[1])
        out.append(check_smoothing_monovariant(a2, 2, eps, f2, tol=tol, seed=s).record())
        a3 = rng.uniform(0.2, 4.0, int(rng.integers(2, 31)))
        a3[0] = 1.0 + float(rng.uniform(0.0, 3.0))
        out.append(check_fn_upper(a3, f2, tol=tol, seed=s).record())
        return out

    for chunk in parallel_map(other_cases, range(trials)):
        records.extend(chunk)

    def shan_case(i: int) -> dict:
        s = seed + i
        seq = _random_seq(s, max_n)
        rng = np.random.default_rng(s + 3 * 10**6)
        ell = int(rng.integers(1, seq.n + 1))
        sigma = float(rng.choice(SIGMAS))
        fa, fb = shan_split(seq, ell, sigma)
        combined = seq.delta(ell) ** (sigma - 1) * spacing_sum(seq, ell, sigma, seq.n)
        rel = abs(fa + fb - combined) / max(combined, 1e-300)
        one_sided = fa <= zeta(sigma) + tol and fb <= zeta(sigma) + tol
        return _rec("shan-chain", rel, 1e-10, rel < 1e-10 and one_sided, seed=s)

    records.extend(parallel_map(shan_case, range(min(trials, 100))))
    return records


def suite_pair_spacing(trials: int = 100, max_n: int = 10, seed: int = 0,
                       tol: float = 1e-12) -> list[dict]:
    """Two-point bound over all index pairs of random short windows.

    One record per window: lhs is the worst margin lhs-rhs over its pairs.
    """
    def one(i: int) -> dict:
        s = seed + i
        seq = _random_seq(s, max_n, min_n=2)
        worst = -math.inf
        ok = True
        for ell in range(1, seq.n + 1):
            for m in range(ell + 1, seq.n + 1):
                rep = pair_spacing_sum(seq, ell, m, tol=tol, seed=s)
                worst = max(worst, rep.lhs - rep.rhs)
                ok = ok and rep.holds
        return _rec("pair-spacing", worst, 0.0, ok, seed=s)

    return parallel_map(one, range(trials))


def suite_radius(trials: int = 100, max_n: int = 12, seed: int = 0,
                 tol: float = 1e-9, schur_n: int = 2000) -> list[dict]:
    """Numerical-radius inequality on random vectors plus the extremal case,
    and the unit-spacing floor/ceiling at large size."""
    records: list[dict] = []

    def one(i: int) -> list[dict]:
        s = seed + i
        rng = np.random.default_rng(s)
        n = int(rng.integers(2, max_n + 1))
        seq = generate_random(n, float(rng.uniform(0.05, 1.0)), s)
        h = build_h(seq, rng.uniform(0.5, 2.0, n))
        out = [r.record() for r in
               numerical_radius_check(h, trials=1, seed=s, tol=tol)]
        pair = eigenpair_top(h)
        rho = spectral_radius(h)
        lhs = abs(2.0 * float(pair.u_im @ (h.entries @ pair.u_re)))
        out.append(_rec("numerical-radius-extremal", lhs, rho,
                        abs(lhs - rho) <= tol * (1.0 + rho), seed=s))
        return out

    for chunk in parallel_map(one, range(trials)):
        records.extend(chunk)

    seq = generate_uniform(schur_n, 1.0)
    rho = spectral_radius(build_h(seq, np.ones(schur_n)))
    records.append(_rec("schur-floor", rho, math.pi - 0.05, rho > math.pi - 0.05, seed=seed))
    records.append(_rec("schur-ceiling", rho, math.pi, rho <= math.pi + tol, seed=seed))
    return records


def _chain_configs(trials: int, seed: int) -> list[tuple[int, GapSequence]]:
    configs = [(seed, generate_uniform(60, 1.0)), (seed, generate_cluster(40))]
    for i in range(trials):
        s = seed + i
        configs.append((s, _random_seq(s, 40, min_n=5)))
    return configs


def suite_chain(trials: int = 20, max_n: int = 40, seed: int = 0,
                tol: float = 1e-9) -> list[dict]:
    """Eigenvalue chain: the diagonal part stays under pi^2/3, the radius
    under sqrt(S + 2T), and the end-to-end proven constant."""
    del max_n
    chain = preissmann_chain()
    records: list[dict] = []

    def one(arg: tuple[int, GapSequence]) -> list[dict]:
        s, seq = arg
        h = build_h(seq)
        pair = eigenpair_top(h)
        s_val, t_val = s_and_t(h, pair)
        rho = spectral_radius(h)
        return [
            _rec("s-bound", s_val, PI2_OVER_3, s_val <= PI2_OVER_3 + tol, seed=s),
            _rec("mu-chain", rho ** 2, s_val + 2.0 * t_val,
                 rho ** 2 <= s_val + 2.0 * t_val + 1e-8, seed=s),
            _rec("mv2-proven", rho, two_forms_bound(chain.c3_upper),
                 rho <= two_forms_bound(chain.c3_upper) + tol, seed=s),
            # informational: how much cancellation the chain discards
            _rec("chain-gap", s_val + 2.0 * t_val - rho ** 2, 0.0, True, seed=s),
        ]

    for chunk in parallel_map(one, _chain_configs(trials, seed)):
        records.extend(chunk)
    return records


def suite_alpha(trials: int = 20, max_n: int = 25, seed: int = 0,
                tol: float = 1e-10) -> list[dict]:
    """Structure of the form in alpha: mirror symmetry, interpolation,
    monotonicity on [0, 1], the pi^2/3 cap at alpha 1, the crude cap, and
    window monotonicity."""
    records: list[dict] = []
    configs: list[tuple[int, GapSequence]] = [(seed, generate_uniform(30, 1.0)),
                                              (seed, generate_cluster(30))]
    for i in range(min(trials, 10)):
        s = seed + i
        configs.append((s, _random_seq(s, max_n)))

    grid = [0.0, 0.25, 0.5, 0.75, 1.0]
    for s, seq in configs:
        values = {a: estimate_constant(a, seq).value for a in
                  sorted({*grid, *(2.0 - a for a in grid)})}
        for a in grid:
            diff = abs(values[a] - values[2.0 - a])
            cap = 1e-11 * max(1.0, values[a])
            records.append(_rec(f"alpha-symmetry-{a:g}", diff, cap, diff <= cap, seed=s))
        for lo, hi in zip(grid[:-1], grid[1:]):
            records.append(_rec(f"alpha-monotone-{lo:g}-{hi:g}", values[hi], values[lo],
                                values[hi] <= values[lo] + tol, seed=s))
        records.append(_rec("alpha-pi2over3-at-1", values[1.0], PI2_OVER_3,
                            values[1.0] <= PI2_OVER_3 + 1e-9, seed=s))
        records.append(_rec("alpha-crude-bound", max(values.values()), seq.n - 1,
                            max(values.values()) <= seq.n - 1 + 1e-9, seed=s))

        rng = np.random.default_rng(s + 5 * 10**6)
        t = rng.uniform(0.0, 1.0, seq.n)
        for _ in range(3):
            a1, a2 = np.sort(rng.uniform(0.0, 2.0, 2))
            if a2 - a1 < 1e-3:
                continue
            theta = float(rng.uniform(0.05, 0.95))
            mid = theta * a1 + (1 - theta) * a2
            lhs = q_alpha(seq, t, mid)
            rhs = q_alpha(seq, t, a1) ** theta * q_alpha(seq, t, a2) ** (1 - theta)
            records.append(_rec("alpha-hoelder", lhs, rhs, lhs <= rhs + tol, seed=s))

        ext = new_gap_sequence(np.append(seq.nodes, seq.nodes[-1] + (seq.nodes[-1] - seq.nodes[-2])))
        for a in (0.0, 1.0):
            v1 = estimate_constant(a, seq).value
            v2 = estimate_constant(a, ext).value
            records.append(_rec(f"alpha-n-monotone-{a:g}", v1, v2, v2 >= v1 - tol, seed=s))

    ratio = cluster_lower_bound(0.0, 400) / cluster_lower_bound(0.0, 100)
    records.append(_rec("cluster-growth-alpha0", ratio, 1.8, ratio >= 1.8, seed=seed))
    for a in (0.0, 0.5, 1.0):
        est = estimate_constant(a, generate_cluster(30)).value
        low = cluster_lower_bound(a, 30)
        records.append(_rec(f"cluster-dominates-{a:g}", low, est, est >= low - 1e-9, seed=seed))
    return records


def _random_trig(seed: int):
    rng = np.random.default_rng(seed)
    m = int(rng.integers(2, 7))
    while True:
        pts = np.sort(rng.uniform(0.0, 1.0, m))
        sep = min(float(np.min(np.diff(pts))), float(pts[0] + 1.0 - pts[-1]))
        if sep > 0.02:
            break
    return trig_config(pts, rng.uniform(0.1, 1.0, m))


def suite_trig(trials: int = 20, max_n: int = 0, seed: int = 0,
               tol: float = 1e-12) -> list[dict]:
    """Torus side: periodization convergence, cluster-sum asymptotics,
    cotangent limit, gap recomputation and closed-form consistency."""
    del max_n
    records: list[dict] = []

    def equiv_case(i: int) -> dict:
        s = seed + i
        cfg = _random_trig(s)
        g1 = abs(periodized_equivalence_check(cfg, 50).gap)
        g2 = abs(periodized_equivalence_check(cfg, 100).gap)
        return _rec("periodized-shrink", g2, g1, g2 < g1, seed=s)

    records.extend(parallel_map(equiv_case, range(trials)))

    ref = trig_config([0.0, 0.5], [1.0, 1.0])
    rep = periodized_equivalence_check(ref, 200)
    rel = abs(rep.gap) / rep.trig_side
    records.append(_rec("periodized-m2-k200", rel, 0.02, rel < 0.02, seed=seed))

    for b in (0.3, 0.5, 0.7):
        def resid(ll: int) -> float:
            return (l_sum(b, ll) - ll ** 3 / (6.0 * b * b)
                    + ll * ll * math.log(ll) / (math.pi ** 2 * b * b)) / ll ** 2
        r1, r2 = resid(1000), resid(2000)
        var = abs(r2 / r1 - 1.0)
        records.append(_rec(f"l-sum-residual-b{b:g}", var, 0.05, var < 0.05, seed=seed))

    cot = cot_limit_check(1, 0.25, 4000)
    rel = abs(cot.gap) / abs(cot.closed)
    records.append(_rec("cot-limit-k1", rel, 1e-2, rel < 1e-2 and cot.shrinks, seed=seed))
    cot5 = cot_limit_check(5, 0.14, 500)
    records.append(_rec("cot-limit-shrinks", abs(cot5.gap_doubled), abs(cot5.gap),
                        cot5.shrinks, seed=seed))

    k0, k1 = kappas(5, 0.14)
    b5 = 1.0 - 6 * 0.14
    closed = cot_limit_check(5, 0.14, 10).closed
    implied = closed * math.sqrt(0.14 ** 3 * b5 / 5.0)
    records.append(_rec("kappa1-consistency", abs(implied - k1), 1e-12 * max(1.0, k1),
                        abs(implied - k1) <= 1e-12 * max(1.0, abs(k1)), seed=seed))

    def gap_case(i: int) -> dict:
        s = seed + 10**6 + i
        cfg = _random_trig(s)
        pts = cfg.points
        brute = np.array([
            min(min(abs(p - q), 1.0 - abs(p - q)) for q in np.delete(pts, j))
            for j, p in enumerate(pts)
        ]) if cfg.m > 1 else np.array([1.0])
        exact = bool(np.all(cfg.gaps == brute)) and bool(np.all(toroidal_gaps(pts) == brute))
        return _rec("torus-gaps", float(np.max(np.abs(cfg.gaps - brute))), 0.0, exact, seed=s)

    records.extend(parallel_map(gap_case, range(min(trials, 50))))

    base = trig_config(np.arange(8) / 8.0, np.full(8, 0.7))
    v0 = trig_form_value(base)
    for shift in (0.123, 0.777):
        v1 = trig_form_value(trig_config(np.arange(8) / 8.0 + shift, np.full(8, 0.7)))
        rel = abs(v1 - v0) / v0
        records.append(_rec("trig-rotation-invariance", rel, tol, rel <= tol, seed=seed))

    res = big_g(5, 0.14)
    fin = trig_form_value(construction_config(5, 0.14, 1000, res.u_star)) / (1.0 + res.u_star ** 2)
    fin2 = trig_form_value(construction_config(5, 0.14, 2000, res.u_star)) / (1.0 + res.u_star ** 2)
    records.append(_rec("construction-finite-cap", fin2, res.g_value + 5e-3,
                        fin2 <= res.g_value + 5e-3 and fin2 > fin, seed=seed))

    cap = (1.0 + math.sqrt(1.2)) / 3.0
    rows, _ = scan(1, 25, 33)
    worst = max(row.result.g_value for row in rows)
    records.append(_rec("lower-bound-soundness", worst, cap, worst <= cap + 1e-9, seed=seed))
    return records


SUITES = {
    "selberg": suite_selberg,
    "spacing": suite_spacing,
    "pair-spacing": suite_pair_spacing,
    "radius": suite_radius,
    "chain": suite_chain,
    "alpha-properties": suite_alpha,
    "trig": suite_trig,
}

ALL_SUITES = ("selberg", "spacing", "pair-spacing", "radius", "chain",
              "alpha-properties", "trig")


def run_suites(names, trials: int = 100, max_n: int = 12, seed: int = 0,
               tol: float | None = None) -> list[dict]:
    """Run the named suites in order with shared sweep parameters."""
    records: list[dict] = []
    for name in names:
        suite = SUITES[name]
        kwargs = {"trials": trials, "seed": seed}
        if name in ("selberg", "radius"):
            kwargs["max_n"] = max_n
        if tol is not None:
            kwargs["tol"] = tol
        records.extend(suite(**kwargs))
    return records
