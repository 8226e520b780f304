"""Level finding, degenerate points and near-critical zero scans."""

import math

import numpy as np
import pytest

from atpqrm.errors import InsufficientPoints, InvalidParams, NoCrossing
from atpqrm.fock import diagonalize
from atpqrm.model import ModelParams, collapse_coupling, pole_energy
from atpqrm.spectrum import (
    count_bound_states_via_exceptional,
    find_degenerate_points,
    find_levels,
    fit_exponential_spacing,
    last_crossing,
    scale_spectrum,
)

# frozen reference levels at delta=0.50, r=0.20, g=0.20 (full window (-1, 8)),
# cross-checked against exact diagonalization at dim 2000 to < 1e-13
LEVELS_Q14 = [
    (-0.251343887, -1),
    (0.198277516, +1),
    (1.792930227, +1),
    (1.978564574, -1),
    (3.675340341, +1),
    (3.995997964, -1),
    (5.340132411, -1),
    (6.255493018, +1),
    (7.015993529, +1),
]
LEVELS_Q34 = [
    (0.745833022, -1),
    (1.103496645, +1),
    (2.833434772, -1),
    (2.880627639, +1),
    (4.509472556, +1),
    (5.126081980, -1),
    (6.172384978, -1),
    (7.353209916, +1),
    (7.898323369, +1),
]


@pytest.mark.parametrize(
    "q,expected", [(0.25, LEVELS_Q14), (0.75, LEVELS_Q34)], ids=["q14", "q34"]
)
def test_find_levels_reference_point(q, expected, warm_kernels):
    p = ModelParams(delta=0.5, r=0.2, g=0.2, q=q)
    found = find_levels(p, (-1.0, 8.0))
    assert len(found.levels) == len(expected)
    for lv, (energy, parity) in zip(found.levels, expected):
        assert lv.energy == pytest.approx(energy, abs=2e-9)
        assert lv.parity == parity


def test_find_levels_agrees_with_ed():
    p = ModelParams(delta=0.5, r=0.2, g=0.2, q=0.25)
    found = find_levels(p, (-1.0, 4.0))
    ed = diagonalize(p, dim=1500, energy_range=(-1.0, 4.0))
    assert len(found.levels) == len(ed.energies)
    order = np.argsort(ed.energies)
    for lv, k in zip(found.levels, order):
        assert lv.energy == pytest.approx(ed.energies[k], abs=1e-8)
        assert lv.parity == ed.parities[k]


def test_find_levels_decoupled_limit():
    # at g = 0 the window holds the bare doublets k +/- delta/2, k = q-ladder
    p = ModelParams(delta=0.5, r=0.2, g=0.0, q=0.25)
    found = find_levels(p, (-1.0, 3.0))
    expect = sorted([-0.25, 0.25, 1.75, 2.25])
    assert [lv.energy for lv in found.levels] == pytest.approx(expect, abs=1e-14)


def test_find_levels_number_conserving_limit():
    # r = 0 closed form: 2n+1 +/- sqrt((1-delta/2)^2 + g^2(2n+1)(2n+2))
    p = ModelParams(delta=1.0, r=0.0, g=0.6, q=0.25)
    found = find_levels(p, (-1.0, 3.0))
    expect = sorted(
        [-0.5]
        + [2 * n + 1 + s * math.sqrt(0.25 + 0.36 * (2 * n + 1) * (2 * n + 2))
           for n in range(5) for s in (+1, -1)]
    )
    expect = [e for e in expect if -1.0 < e < 3.0]
    assert [lv.energy for lv in found.levels] == pytest.approx(expect, abs=1e-12)


def test_find_levels_rejects_empty_window():
    p = ModelParams(delta=0.5, r=0.2, g=0.2)
    with pytest.raises(InvalidParams):
        find_levels(p, (2.0, 2.0))


def test_scale_spectrum_puts_poles_on_integers():
    p = ModelParams(delta=0.5, r=0.2, g=0.2)
    poles = [pole_energy(n, p) for n in range(4)]
    np.testing.assert_allclose(scale_spectrum(p, poles), np.arange(4.0), atol=1e-12)


class TestDegeneratePoints:
    def test_two_roots_on_second_pole_line(self):
        pts = find_degenerate_points(0.6, 0.25, 0.25, 2)
        assert [p.g_value for p in pts] == pytest.approx(
            [0.16150799371823166, 0.59277391211148567], abs=1e-10
        )
        for p in pts:
            assert p.energy == pytest.approx(
                pole_energy(2, ModelParams(delta=0.6, r=0.25, g=p.g_value, q=0.25)), abs=1e-12
            )

    def test_both_parities_truly_degenerate(self):
        # the crossing is a two-fold degeneracy, visible to diagonalization
        pt = find_degenerate_points(0.6, 0.25, 0.25, 1)[0]
        ed = diagonalize(
            ModelParams(delta=0.6, r=0.25, g=pt.g_value, q=0.25),
            dim=1200,
            energy_range=(pt.energy - 0.1, pt.energy + 0.1),
            strict_parity=False,
        )
        close = np.abs(ed.energies - pt.energy) < 1e-8
        assert close.sum() == 2

    def test_no_crossing_above_threshold(self):
        # splitting above its critical value leaves pole line 0 uncrossed
        assert find_degenerate_points(0.7, 0.25, 0.25, 0) == []
        with pytest.raises(NoCrossing):
            last_crossing(0.7, 0.25, 0.25, 0)

    def test_last_crossing_picks_largest_coupling(self):
        pt = last_crossing(0.6, 0.25, 0.25, 2)
        assert pt.g_value == pytest.approx(0.59277391211148567, abs=1e-10)


class TestExceptionalZeros:
    def test_structure_and_count(self, warm_kernels):
        found = count_bound_states_via_exceptional(
            5.0, 0.25, truncations=(20000,), x_range=(0.5, 6.0), samples_per_unit=32
        )
        assert found.truncations == (20000,)
        xs = found.zeros_x[20000]
        assert found.count(20000) == len(xs) >= 2
        assert list(xs) == sorted(xs)
        assert xs[0] == pytest.approx(2.5815, abs=1e-3)

    def test_no_zeros_in_finite_regime(self, warm_kernels):
        found = count_bound_states_via_exceptional(
            1.2, 0.25, truncations=(20000,), x_range=(0.5, 6.0), samples_per_unit=32
        )
        assert found.count(20000) == 0


class TestSpacingFit:
    def test_recovers_synthetic_law(self):
        mu, mu0 = 2.3, -0.4
        x = (mu * np.arange(5) - mu0) / math.log(10.0)
        fit = fit_exponential_spacing(zeros_x=x)
        assert fit.mu == pytest.approx(mu, rel=1e-12)
        assert fit.mu0 == pytest.approx(mu0, rel=1e-9)
        assert fit.max_rel_residual < 1e-12

    def test_coupling_entry_matches_x_entry(self):
        g_crit = collapse_coupling(2.0)
        x = np.array([1.0, 2.1, 3.15, 4.3])
        g = g_crit * (1.0 - 10.0 ** (-x))
        a = fit_exponential_spacing(zeros_g=g, g_crit=g_crit)
        b = fit_exponential_spacing(zeros_x=x)
        assert a.mu == pytest.approx(b.mu, rel=1e-9)

    def test_needs_three_points(self):
        with pytest.raises(InsufficientPoints):
            fit_exponential_spacing(zeros_x=np.array([1.0, 2.0]))

    def test_needs_some_entry(self):
        with pytest.raises(InvalidParams):
            fit_exponential_spacing()
