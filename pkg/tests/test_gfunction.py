"""Series evaluation of the spectral functions against the oracle."""

import math

import numpy as np
import pytest

from atpqrm.errors import InvalidParams, PoleProximity
from atpqrm.gfunction import (
    DEFAULT_TOL,
    MIN_TRUNCATION,
    degeneracy_function,
    degeneracy_function_at_collapse,
    degeneracy_scale,
    exceptional_g_function,
    exceptional_scan,
    g_function,
    g_function_grid,
    g_function_pair,
    partial_sums,
)
from atpqrm.model import ModelParams, collapse_coupling, crossing_point
from atpqrm.recurrence import rescaled_series

import oracles

FIG1 = dict(delta=0.5, r=0.2, q=0.25, g=0.2)


def fig1_params(parity=+1):
    return ModelParams(parity=parity, **FIG1)


class TestGFunction:
    def test_matches_oracle_at_fixed_truncation(self):
        n = 500
        gp_o, gm_o = oracles.series_sums(energy=0.3, n_terms=n, **FIG1)
        plus, minus = g_function_pair(fig1_params(), 0.3, n_terms=n)
        assert oracles.rel_err(plus.value, gp_o) < 1e-13
        assert oracles.rel_err(minus.value, gm_o) < 1e-13

    def test_parity_selection(self):
        plus, minus = g_function_pair(fig1_params(), 0.3)
        assert g_function(fig1_params(+1), 0.3).value == plus.value
        assert g_function(fig1_params(-1), 0.3).value == minus.value

    def test_diagnostics(self):
        ev = g_function(fig1_params(), 0.3)
        assert ev.converged
        assert ev.truncation_used <= ev.truncation_requested
        assert abs(ev.tail) < DEFAULT_TOL
        assert ev.pole_distance > 0.0
        assert not ev.precision_floor

    def test_truncation_floor(self):
        # requests below the safety floor are raised to it, never lowered
        ev = g_function(fig1_params(), 0.3)
        assert ev.truncation_requested >= MIN_TRUNCATION
        short = g_function(fig1_params(), 0.3, n_terms=40)
        assert short.truncation_requested == MIN_TRUNCATION

    def test_pole_guard(self):
        p = fig1_params()
        from atpqrm.model import pole_energy

        with pytest.raises(PoleProximity):
            g_function(p, pole_energy(1, p))

    def test_grid_matches_pointwise(self):
        p = fig1_params()
        energies = np.array([-0.7, 0.3, 1.1, 4.2])
        gp, gm, tails, used = g_function_grid(p, energies)
        for i, e in enumerate(energies):
            plus, minus = g_function_pair(p, e)
            assert gp[i] == plus.value and gm[i] == minus.value


class TestPartialSums:
    def test_matches_evaluation(self):
        p = fig1_params()
        s = rescaled_series(p, 0.3, 600)
        plus, minus = g_function_pair(p, 0.3, n_terms=600)
        assert partial_sums(s, +1) == pytest.approx(plus.value, rel=1e-12)
        assert partial_sums(s, -1) == pytest.approx(minus.value, rel=1e-12)

    def test_compensation_is_benign_here(self):
        # well-conditioned point: both summation orders agree to near-machine
        s = rescaled_series(fig1_params(), 0.3, 600)
        for parity in (+1, -1):
            a = partial_sums(s, parity, compensated=True)
            b = partial_sums(s, parity, compensated=False)
            assert abs(a - b) <= 1e-13 * abs(a)


class TestExceptional:
    @pytest.mark.parametrize("m", [0, 2])
    @pytest.mark.parametrize("q", [0.25, 0.75])
    def test_restart_matches_oracle(self, m, q, warm_kernels):
        n_terms = 4000
        gp_o, gm_o = oracles.restarted_sums(0.5, 0.25, q, 0.8 * (1 - 1e-3), m, n_terms)
        plus = exceptional_g_function(0.5, 0.25, q, m, eps=1e-3, parity=+1, n_terms=n_terms)
        minus = exceptional_g_function(0.5, 0.25, q, m, eps=1e-3, parity=-1, n_terms=n_terms)
        assert oracles.rel_err(plus.value, gp_o) < 1e-12
        assert oracles.rel_err(minus.value, gm_o) < 1e-12

    def test_g_and_eps_entries_agree(self):
        g_crit = collapse_coupling(0.25)
        by_eps = exceptional_g_function(1.2, 0.25, 0.25, 0, eps=1e-2, n_terms=2000)
        by_g = exceptional_g_function(1.2, 0.25, 0.25, 0, g=g_crit * (1 - 1e-2), n_terms=2000)
        assert by_g.value == pytest.approx(by_eps.value, rel=1e-12)

    def test_requires_exactly_one_coupling_entry(self):
        with pytest.raises(InvalidParams):
            exceptional_g_function(1.2, 0.25, 0.25, 0)
        with pytest.raises(InvalidParams):
            exceptional_g_function(1.2, 0.25, 0.25, 0, g=0.5, eps=1e-3)

    def test_precision_floor_flag(self):
        deep = exceptional_g_function(1.2, 0.25, 0.25, 0, eps=1e-16, n_terms=2000)
        assert deep.precision_floor
        assert math.isfinite(deep.value)
        near = exceptional_g_function(1.2, 0.25, 0.25, 0, eps=1e-14, n_terms=2000)
        assert not near.precision_floor

    def test_scan_matches_single_evaluations(self, warm_kernels):
        x = np.array([1.0, 2.0, 3.0])
        scan = exceptional_scan(1.2, 0.25, 0.25, 0, x, n_terms=2000)
        for i, xi in enumerate(x):
            ev = exceptional_g_function(1.2, 0.25, 0.25, 0, eps=10.0 ** (-xi), n_terms=2000)
            assert scan.g_plus[i] == pytest.approx(ev.value, rel=1e-13)
        assert scan.truncation == 2000
        assert scan.converged.all()
        np.testing.assert_allclose(
            scan.g, collapse_coupling(0.25) * (1.0 - 10.0 ** (-x)), rtol=1e-15
        )


class TestDegeneracyFunction:
    def test_closed_form_root_of_first_function(self):
        # the n=0 member vanishes exactly where the two parity levels cross
        for delta, r in [(0.3, 0.25), (0.45, 0.1), (0.2, 0.5)]:
            g0 = crossing_point(0.25, delta, r).g
            val = degeneracy_function(delta, r, 0.25, 0, g0)
            assert abs(val) < 1e-12

    def test_known_roots_on_higher_pole_lines(self):
        # frozen from an exact-diagonalization confirmation of true double
        # degeneracies at delta=0.6, r=0.25, q=1/4
        for n, g_root in [(1, 0.28714024510386649), (2, 0.16150799371823166), (2, 0.59277391211148567)]:
            val = degeneracy_function(0.6, 0.25, 0.25, n, g_root)
            assert abs(val) < 1e-10

    def test_sign_change_brackets_root(self):
        g_root = 0.28714024510386649
        lo = degeneracy_function(0.6, 0.25, 0.25, 1, g_root - 1e-3)
        hi = degeneracy_function(0.6, 0.25, 0.25, 1, g_root + 1e-3)
        assert lo * hi < 0.0

    def test_collapse_evaluation_consistent_with_near_critical_limit(self):
        dc = 0.6  # critical splitting for q=1/4, r=0.25
        at = degeneracy_function_at_collapse(dc, 0.25, 0.25, 4)
        near = degeneracy_function(dc, 0.25, 0.25, 4, collapse_coupling(0.25) * (1 - 1e-9))
        assert at == pytest.approx(0.0, abs=1e-13)
        assert near == pytest.approx(at, abs=1e-6)

    def test_scale_factor(self):
        assert degeneracy_scale(0.25, 0) == 1.0
        assert degeneracy_scale(0.25, 3) == pytest.approx((1.25**2 / 2.0) ** 3)
