import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from hilbertlab import (
    big_g,
    construction_config,
    cot_limit_check,
    g_of_u,
    kappas,
    l_sum,
    periodized_equivalence_check,
    scan,
    trig_config,
    trig_form_value,
)
from hilbertlab.errors import (
    AOutOfRange,
    LengthMismatch,
    NegativeEntry,
    SeparationTooSmall,
)
from hilbertlab.lowerbound import maximize_g, periodize, toroidal_gaps

# independent high-precision values (mpmath, 40 digits) for K=5, A=0.14
KAPPA0_5_014 = 0.24397332105959524
KAPPA1_5_014 = 0.085449651042534327
G_5_014 = 0.35047333742141797


def random_config(seed):
    rng = np.random.default_rng(seed)
    m = int(rng.integers(2, 7))
    while True:
        pts = np.sort(rng.uniform(0.0, 1.0, m))
        sep = min(float(np.min(np.diff(pts))), float(pts[0] + 1.0 - pts[-1]))
        if sep > 0.02:
            break
    return trig_config(pts, rng.uniform(0.1, 1.0, m))


class TestTrigConfig:
    def test_single_point_conventional_gap(self):
        cfg = trig_config([0.3], [1.0])
        assert np.array_equal(cfg.gaps, [1.0])

    def test_two_antipodal_points(self):
        cfg = trig_config([0.0, 0.5], [1.0, 1.0])
        assert np.allclose(cfg.gaps, [0.5, 0.5])

    def test_rejects_near_coincident_points(self):
        with pytest.raises(SeparationTooSmall):
            trig_config([0.1, 0.1 + 1e-12], [1.0, 1.0])

    def test_rejects_mismatched_weights(self):
        with pytest.raises(LengthMismatch):
            trig_config([0.1, 0.5], [1.0])

    def test_rejects_negative_weights(self):
        with pytest.raises(NegativeEntry):
            trig_config([0.1, 0.5], [1.0, -1.0])

    @pytest.mark.parametrize("seed", range(40))
    def test_gaps_match_all_pairs_oracle_exactly(self, seed):
        cfg = random_config(seed)
        pts = cfg.points
        brute = np.array([
            min(min(abs(p - q), 1.0 - abs(p - q)) for q in np.delete(pts, j))
            for j, p in enumerate(pts)
        ])
        assert np.array_equal(cfg.gaps, brute)
        assert np.array_equal(toroidal_gaps(pts), brute)


class TestTrigFormValue:
    def test_single_point(self):
        assert trig_form_value(trig_config([0.2], [1.0])) == pytest.approx(1 / 3, rel=1e-15)

    def test_two_antipodal_points(self):
        value = trig_form_value(trig_config([0.0, 0.5], [1.0, 1.0]))
        assert value == pytest.approx(1 / 6 + 1 / 2, rel=1e-14)

    @pytest.mark.parametrize("shift", [0.123, 0.777])
    def test_rotation_invariance_equal_weights(self, shift):
        pts = np.arange(8) / 8.0
        tau = np.full(8, 0.7)
        v0 = trig_form_value(trig_config(pts, tau))
        v1 = trig_form_value(trig_config(pts + shift, tau))
        assert v1 == pytest.approx(v0, rel=1e-12)

    def test_matches_double_loop_oracle(self):
        cfg = random_config(3)
        d, tau, x = cfg.gaps, cfg.weights, cfg.points
        total = float(np.sum(d ** 2 * tau ** 2)) / 3.0
        for m in range(cfg.m):
            for n in range(cfg.m):
                if m != n:
                    total += (d[m] ** 1.5 * d[n] ** 0.5 * tau[m] * tau[n]
                              / math.sin(math.pi * (x[m] - x[n])) ** 2)
        assert trig_form_value(cfg) == pytest.approx(total, rel=1e-12)

    def test_finite_construction_approaches_closed_form(self):
        res = big_g(5, 0.14)
        cfg = construction_config(5, 0.14, 2000, res.u_star)
        value = trig_form_value(cfg) / (1.0 + res.u_star ** 2)
        assert abs(value - res.g_value) < 2e-3


class TestPeriodization:
    def test_line_deltas_reproduce_torus_gaps(self):
        cfg = random_config(11)
        seq, t = periodize(cfg, 5)
        assert seq.n == 5 * cfg.m
        assert np.allclose(seq.deltas, np.tile(cfg.gaps, 5), rtol=1e-12)
        assert np.array_equal(t.values, np.tile(cfg.weights, 5))

    def test_reference_gap_at_two_hundred_periods(self):
        cfg = trig_config([0.0, 0.5], [1.0, 1.0])
        rep = periodized_equivalence_check(cfg, 200)
        assert abs(rep.gap) < 0.02 * rep.trig_side

    def test_zero_weights_vanish(self):
        cfg = trig_config([0.0, 0.5], [0.0, 0.0])
        rep = periodized_equivalence_check(cfg, 4)
        assert rep.line_side == 0.0 and rep.trig_side == 0.0

    @pytest.mark.parametrize("seed", range(20))
    def test_doubling_periods_shrinks_gap(self, seed):
        cfg = random_config(seed)
        g1 = abs(periodized_equivalence_check(cfg, 50).gap)
        g2 = abs(periodized_equivalence_check(cfg, 100).gap)
        assert g2 < g1

    def test_requires_two_periods(self):
        with pytest.raises(ValueError):
            periodized_equivalence_check(trig_config([0.0, 0.5], [1.0, 1.0]), 1)


class TestLSum:
    def test_single_term(self):
        assert l_sum(0.5, 1) == pytest.approx(1.0, rel=1e-15)

    def test_two_terms(self):
        assert l_sum(0.5, 2) == pytest.approx(5.0, rel=1e-14)

    def test_rejects_bad_inputs(self):
        with pytest.raises(ValueError):
            l_sum(1.0, 5)
        with pytest.raises(ValueError):
            l_sum(0.5, 0)

    @pytest.mark.parametrize("b", [0.3, 0.5, 0.7])
    def test_residual_stable_under_doubling(self, b):
        def residual(ll):
            return (l_sum(b, ll) - ll ** 3 / (6 * b * b)
                    + ll * ll * math.log(ll) / (math.pi ** 2 * b * b)) / ll ** 2

        r = [residual(ll) for ll in (500, 1000, 2000)]
        assert abs(r[1] / r[0] - 1.0) < 0.05
        assert abs(r[2] / r[1] - 1.0) < 0.05


class TestKappas:
    def test_single_coarse_point_closed_form(self):
        kappa0, kappa1 = kappas(1, 0.25)
        assert kappa0 == pytest.approx(0.25 ** 2 / 3, rel=1e-15)
        # cot(pi/4) = 1, B = 1/2
        assert kappa1 == pytest.approx((2 / math.pi) * math.sqrt(0.25 ** 3 / 0.5), rel=1e-14)

    def test_headline_point_matches_high_precision_oracle(self):
        kappa0, kappa1 = kappas(5, 0.14)
        assert kappa0 == pytest.approx(KAPPA0_5_014, rel=1e-12)
        assert kappa1 == pytest.approx(KAPPA1_5_014, rel=1e-12)
        # spec-level rounding
        assert kappa0 == pytest.approx(0.2440, abs=5e-5)
        assert kappa1 == pytest.approx(0.0854, abs=5e-5)

    def test_small_offset_limits(self):
        kappa0, kappa1 = kappas(1, 1e-4)
        assert kappa0 < 1e-8
        assert kappa1 < 3e-3
        # with several coarse points only kappa_1 vanishes; kappa_0 tends to
        # (2/(pi^2 K)) sum_{j<K} (K-j)/j^2
        kappa0_5, kappa1_5 = kappas(5, 1e-4)
        limit = (2 / (math.pi ** 2 * 5)) * sum((5 - j) / j ** 2 for j in range(1, 5))
        assert kappa0_5 == pytest.approx(limit, abs=1e-6)
        assert kappa1_5 < 3e-3

    def test_rejects_out_of_range_offset(self):
        with pytest.raises(AOutOfRange):
            kappas(5, 1.0 / 6.0)
        with pytest.raises(AOutOfRange):
            kappas(5, 0.0)


class TestGOfU:
    def test_endpoints(self):
        assert g_of_u(0.25, 0.1, 0.0) == 0.25
        assert g_of_u(0.25, 0.1, 1e6) == pytest.approx(1 / 3, abs=1e-5)

    def test_rejects_negative_u(self):
        with pytest.raises(ValueError):
            g_of_u(0.2, 0.1, -1.0)

    def test_stationary_at_maximizer(self):
        res = big_g(5, 0.14)
        val = g_of_u(res.kappa0, res.kappa1, res.u_star)
        assert val == pytest.approx(res.g_value, rel=1e-12)
        eps = 1e-7
        deriv = (g_of_u(res.kappa0, res.kappa1, res.u_star + eps)
                 - g_of_u(res.kappa0, res.kappa1, res.u_star - eps)) / (2 * eps)
        assert abs(deriv) < 1e-6

    @settings(max_examples=200, deadline=None, derandomize=True)
    @given(u=st.floats(min_value=0.0, max_value=1e6, allow_nan=False))
    def test_closed_form_dominates_everywhere(self, u):
        res = big_g(5, 0.14)
        assert g_of_u(res.kappa0, res.kappa1, u) <= res.g_value + 1e-12


class TestMaximizeG:
    def test_degenerate_kappa1_above_third(self):
        u_star, g = maximize_g(0.4, 0.0)
        assert (u_star, g) == (0.0, 0.4)

    def test_degenerate_kappa1_below_third(self):
        u_star, g = maximize_g(0.2, 0.0)
        assert u_star == math.inf
        assert g == pytest.approx(1 / 3, rel=1e-15)

    def test_negative_kappa1_uses_endpoint_supremum(self):
        u_star, g = maximize_g(0.2, -0.1)
        assert g == pytest.approx(1 / 3, rel=1e-15)
        grid = np.linspace(0.0, 50.0, 2001)
        values = (0.2 - 0.1 * grid + grid ** 2 / 3) / (1 + grid ** 2)
        assert np.max(values) <= g + 1e-12


class TestBigG:
    def test_headline_bound(self):
        res = big_g(5, 0.14)
        assert res.g_value > 0.35047
        assert res.g_value == pytest.approx(G_5_014, rel=1e-12)
        assert res.b == pytest.approx(0.16, rel=1e-14)

    def test_never_below_one_third(self):
        for k in (1, 2, 5, 9):
            for frac in (0.05, 0.3, 0.6, 0.95):
                res = big_g(k, frac / (k + 1))
                assert res.g_value >= 1 / 3 - 1e-12


class TestScan:
    def test_figure_grid_argmax(self):
        rows, best = scan(1, 25, 99)
        assert len(rows) == 25 * 99
        assert (best.k, best.x) == (5, 0.84)
        assert best.result.g_value > 0.35047

    def test_rows_sorted_and_positive_b(self):
        rows, _ = scan(1, 1, 9)
        assert [(r.k, r.x) for r in rows] == sorted((r.k, r.x) for r in rows)
        assert all(r.result.b > 0 for r in rows)

    def test_grid_refinement_never_decreases_argmax(self):
        _, coarse = scan(1, 12, 49)
        _, fine = scan(1, 12, 99)
        assert fine.result.g_value >= coarse.result.g_value

    def test_soundness_against_chain_upper_bound(self):
        cap = (1 + math.sqrt(1.2)) / 3.0
        rows, _ = scan(1, 25, 33)
        assert max(r.result.g_value for r in rows) <= cap + 1e-9


class TestCotLimit:
    def test_single_point_riemann_convergence(self):
        rep = cot_limit_check(1, 0.25, 4000)
        assert abs(rep.gap) / abs(rep.closed) < 1e-2
        assert rep.shrinks

    @pytest.mark.parametrize("k,a", [(1, 0.25), (5, 0.14), (3, 0.2)])
    def test_doubling_shrinks_gap(self, k, a):
        assert cot_limit_check(k, a, 400).shrinks

    def test_closed_form_consistent_with_kappa1(self):
        rep = cot_limit_check(5, 0.14, 10)
        b = 1.0 - 6 * 0.14
        implied = rep.closed * math.sqrt(0.14 ** 3 * b / 5.0)
        _, kappa1 = kappas(5, 0.14)
        assert implied == pytest.approx(kappa1, rel=1e-12)


class TestConstructionConfig:
    def test_rejects_coarse_cluster(self):
        # B/A = 8, so L must be at least 8
        with pytest.raises(ValueError):
            construction_config(1, 0.1, 4, 1.0)

    def test_point_and_weight_layout(self):
        cfg = construction_config(5, 0.14, 20, 2.0)
        assert cfg.m == 5 + 21
        assert np.min(cfg.weights) > 0
        # coarse points keep gap A, cluster points B/L
        assert np.sum(np.isclose(cfg.gaps, 0.14, rtol=1e-9)) == 5
        assert np.sum(np.isclose(cfg.gaps, 0.16 / 20, rtol=1e-9)) == 21

    def test_finite_values_increase_toward_closed_form(self):
        res = big_g(5, 0.14)
        values = []
        for ll in (1000, 2000):
            cfg = construction_config(5, 0.14, ll, res.u_star)
            values.append(trig_form_value(cfg) / (1.0 + res.u_star ** 2))
        assert values[0] < values[1] <= res.g_value + 5e-3
