"""Collapse-point bound-state machinery: operator, tails, integrals."""

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from atpqrm.collapse import (
    build_problem,
    brownstein_integral,
    collapse_potential,
    effective_mass,
    faddeev_integral,
    kappa4_threshold_bound,
    mass_ratio,
    nondegeneracy_check,
    solve_bound_states,
    splitting_pair,
    stretched_coordinate,
    stretched_potential,
    tail_coefficients,
    unstretched_coordinate,
)
from atpqrm.errors import DomainTooSmall

R = 0.25  # reference asymmetry used throughout the bound-state figures
A, B = splitting_pair(R)  # 0.6 and 1.8


class TestOperatorPieces:
    def test_mass_ratio_range(self):
        assert mass_ratio(1.0) == 1.0
        assert 0.0 < mass_ratio(0.25) < 1.0
        assert mass_ratio(0.25) == pytest.approx(0.64)
        assert mass_ratio(4.0) == mass_ratio(0.25)  # r -> 1/r symmetry

    def test_effective_mass_limits(self):
        # m(0) = 1 and m -> 1/alpha far out
        assert effective_mass(0.0, R) == pytest.approx(1.0)
        assert effective_mass(1e6, R) == pytest.approx(1.0 / mass_ratio(R), rel=1e-9)

    def test_splitting_pair(self):
        assert A == pytest.approx(0.6)
        assert B == pytest.approx(3.0 * A)

    def test_potential_vanishes_at_lower_splitting(self):
        x = np.linspace(-30.0, 30.0, 301)
        np.testing.assert_allclose(collapse_potential(x, A, R), 0.0, atol=1e-15)

    def test_potential_sign_flips_across_splitting(self):
        # inner well turns over when the splitting crosses its lower critical
        # value: attractive below, repulsive core above
        assert collapse_potential(0.0, 0.5, R) > 0.0
        assert collapse_potential(0.0, 0.7, R) < 0.0

    def test_potential_decays_quadratically(self):
        v10 = collapse_potential(10.0, 1.2, R)
        v20 = collapse_potential(20.0, 1.2, R)
        assert v10 != 0.0
        assert v20 / v10 == pytest.approx(0.25, rel=0.05)

    @given(st.floats(-80.0, 80.0))
    @settings(max_examples=80, deadline=None)
    def test_coordinate_round_trip(self, x):
        y = stretched_coordinate(x, R)
        assert unstretched_coordinate(y, R) == pytest.approx(x, abs=1e-9)

    def test_stretched_coordinate_is_odd_and_monotone(self):
        xs = np.linspace(0.0, 50.0, 200)
        ys = stretched_coordinate(xs, R)
        assert (np.diff(ys) > 0.0).all()
        assert stretched_coordinate(-3.0, R) == -stretched_coordinate(3.0, R)

    def test_stretched_potential_zero_case(self):
        ys = np.linspace(-40.0, 40.0, 101)
        np.testing.assert_allclose(stretched_potential(ys, A, R), 0.0, atol=1e-14)


class TestTailClassification:
    def test_regions_by_splitting(self):
        assert tail_coefficients(0.4, R).region == "A"
        assert tail_coefficients(1.2, R).region == "B"
        assert tail_coefficients(2.5, R).region == "C"
        assert tail_coefficients(A, R).region == "boundary"
        assert tail_coefficients(B, R).region == "boundary"

    def test_expected_counts(self):
        assert tail_coefficients(0.4, R).expected_count == "infinite"
        assert tail_coefficients(1.2, R).expected_count == "finite"
        assert tail_coefficients(2.5, R).expected_count == "infinite"
        assert tail_coefficients(A, R).expected_count == "none"
        assert tail_coefficients(B, R).expected_count == "finite"

    def test_tail_attraction_signs(self):
        # leading 1/y^2 coefficient: attractive (negative) in A and C where
        # the state count is infinite, repulsive in B
        assert tail_coefficients(0.4, R).gamma < 0.0
        assert tail_coefficients(1.2, R).gamma > 0.0
        assert tail_coefficients(2.5, R).gamma < 0.0

    def test_subleading_sign_at_upper_boundary(self):
        assert tail_coefficients(B, R).gamma_prime < 0.0

    def test_threshold_bound(self):
        # permissible kappa^4 window closes as the splitting approaches its
        # critical value from below
        near = kappa4_threshold_bound(0.59, R)
        far = kappa4_threshold_bound(0.3, R)
        assert 0.0 < near < far
        assert kappa4_threshold_bound(0.5, 1.0) == math.inf


class TestBoundStates:
    def test_single_shallow_state_below_splitting(self):
        found = solve_bound_states(0.5, R, spacing=0.02)
        assert found.count == 1
        st0 = found.states[0]
        assert st0.kappa4 == pytest.approx(1.92e-5, rel=0.05)
        assert st0.energy == pytest.approx(-0.5 - math.sqrt(st0.kappa4), rel=1e-12)
        assert st0.parity == +1

    def test_no_state_at_critical_splitting(self):
        found = solve_bound_states(A, R, spacing=0.02)
        assert found.count == 0
        assert found.ground_energy() == -0.5
        assert found.diagnostics["lowest_eigenvalue"] >= -found.diagnostics["noise_floor"]

    def test_strict_mode_raises_when_domain_cannot_hold_the_state(self):
        # the delta=0.7 state needs L ~ 800; at L = 200 it leaks and strict
        # mode refuses to call the result empty
        with pytest.raises(DomainTooSmall):
            solve_bound_states(
                0.7, R, length=200.0, spacing=0.02,
                auto_enlarge=False, strict=True,
            )

    def test_nondegeneracy_of_ground_state(self):
        found = solve_bound_states(0.7, R, spacing=0.02)
        report = nondegeneracy_check(found)
        assert report["simple"]
        assert not report["vacuous"]
        assert report["gap"] is None or report["gap"] > 0.0

    def test_problem_grid_layout(self):
        prob = build_problem(0.5, R, length=20.0, spacing=0.1)
        assert prob.x.size % 2 == 1
        assert 0.0 in prob.x
        assert prob.x[0] == -20.0 and prob.x[-1] == 20.0
        assert prob.mass.shape == prob.x.shape == prob.potential.shape


class TestIntegralCriteria:
    def test_first_integral_divergence_pattern(self):
        assert faddeev_integral(0.3, R).divergent
        assert faddeev_integral(2.5, R).divergent
        assert not faddeev_integral(1.2, R).divergent
        zero_case = faddeev_integral(A, R)
        assert not zero_case.divergent
        assert zero_case.value == 0.0

    def test_first_integral_kappa_opens_finite_window(self):
        # the kappa^4 shift adds a positive 1/y^2 piece, so a large enough
        # binding scale tames the region-A divergence; a small one does not
        weak = faddeev_integral(0.3, R, kappa=0.1)
        strong = faddeev_integral(0.3, R, kappa=2.0)
        assert weak.divergent
        assert not strong.divergent

    def test_second_integral_reference_values(self):
        # frozen against an exact closed form of the x-space quadrature
        assert brownstein_integral(0.5, R) == pytest.approx(8.502721e-3, rel=1e-5)
        assert brownstein_integral(0.7, R) == pytest.approx(-1.931922e-2, rel=1e-5)
        assert brownstein_integral(A, R) == 0.0

    def test_second_integral_closed_form_everywhere(self):
        # -(pi/64) [(5a^2+2a+1)(D-a)(D-b) + (a^2+2a+5)(D^2-a^2)], a = alpha
        al = mass_ratio(R)
        j2 = 5 * al**2 + 2 * al + 1
        j0 = al**2 + 2 * al + 5
        for delta in (0.35, 0.45, 0.8, 1.5, 2.2):
            expect = -(math.pi / 64.0) * (
                j2 * (delta - A) * (delta - B) + j0 * (delta**2 - A**2)
            )
            assert brownstein_integral(delta, R) == pytest.approx(expect, rel=1e-7)
