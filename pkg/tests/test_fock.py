"""Truncated-basis diagonalization and its closed-form anchors."""

import math

import numpy as np
import pytest

from atpqrm.errors import AmbiguousParity, InvalidParams
from atpqrm.fock import (
    critical_min_eigenvalue,
    critical_quadratic_form,
    diagonalize,
    ed_levels,
    hamiltonian_bands,
    parity_expectations,
    parity_weights,
    rwa_spectrum,
)
from atpqrm.model import ModelParams


def dense_from_bands(bands):
    size = bands.shape[1]
    h = np.zeros((size, size))
    for off in range(4):
        vals = bands[off, : size - off]
        h[np.arange(size - off) + off, np.arange(size - off)] = vals
    return h + np.tril(h, -1).T


class TestHamiltonian:
    def test_band_layout_small_case(self):
        # q = 1/4 ladder: rungs 0 and 2, basis (up0, down0, up2, down2)
        h = dense_from_bands(hamiltonian_bands(0.5, 0.3, 0.1, 0.25, 4))
        hop = 0.1 * math.sqrt(2.0)
        expect = np.array(
            [
                [0.25, 0.0, 0.0, hop],
                [0.0, -0.25, 0.3 * hop, 0.0],
                [0.0, 0.3 * hop, 2.25, 0.0],
                [hop, 0.0, 0.0, 1.75],
            ]
        )
        np.testing.assert_allclose(h, expect, atol=1e-15)

    def test_q_sector_offset(self):
        h14 = dense_from_bands(hamiltonian_bands(0.0, 0.3, 0.0, 0.25, 4))
        h34 = dense_from_bands(hamiltonian_bands(0.0, 0.3, 0.0, 0.75, 4))
        # odd ladder sits exactly one photon higher at g = 0
        np.testing.assert_allclose(np.diag(h34), np.diag(h14) + 1.0)

    def test_rejects_odd_size(self):
        with pytest.raises(InvalidParams):
            hamiltonian_bands(0.5, 0.3, 0.1, 0.25, 5)

    def test_parity_weights_square_to_identity(self):
        w = parity_weights(12)
        assert set(np.unique(w)) == {-1.0, 1.0}
        # reflection commutes with the Hamiltonian: conjugation leaves it fixed
        h = dense_from_bands(hamiltonian_bands(0.7, 0.4, 0.15, 0.25, 12))
        np.testing.assert_allclose(np.diag(w) @ h @ np.diag(w), h, atol=1e-15)


class TestDiagonalize:
    def test_restriction_modes_agree(self):
        p = ModelParams(delta=0.5, r=0.2, g=0.2)
        full = diagonalize(p, 300)
        lowest = diagonalize(p, 300, n_lowest=5)
        window = diagonalize(p, 300, energy_range=(-1.0, 3.0))
        np.testing.assert_allclose(np.sort(full.energies)[:5], lowest.energies, atol=1e-12)
        inside = full.energies[(full.energies > -1.0) & (full.energies < 3.0)]
        np.testing.assert_allclose(np.sort(inside), np.sort(window.energies), atol=1e-12)

    def test_rejects_double_restriction(self):
        p = ModelParams(delta=0.5, r=0.2, g=0.2)
        with pytest.raises(InvalidParams):
            diagonalize(p, 100, energy_range=(0, 1), n_lowest=3)

    def test_truncation_convergence_of_low_levels(self):
        p = ModelParams(delta=0.5, r=0.2, g=0.2)
        a = diagonalize(p, 400, n_lowest=6).energies
        b = diagonalize(p, 800, n_lowest=6).energies
        np.testing.assert_allclose(a, b, atol=1e-12)

    def test_parity_labels_are_clean_generically(self):
        res = diagonalize(ModelParams(delta=0.5, r=0.2, g=0.2), 400, n_lowest=10)
        assert set(res.parities) <= {-1, 1}
        assert res.branch(+1).size + res.branch(-1).size == 10

    def test_ambiguous_parity_on_mixed_vector(self):
        # an even/odd superposition (as a degenerate pair may come back from
        # the eigensolver) has no branch label; strict mode must refuse it
        from atpqrm.fock import parity_labels

        mixed = np.full((2, 1), 1.0 / math.sqrt(2.0))
        with pytest.raises(AmbiguousParity):
            parity_labels(mixed, strict=True)
        assert parity_labels(mixed, strict=False).tolist() == [0]

    def test_degenerate_pair_energies_still_resolved(self):
        # at a true crossing the two energies agree even if labels may not
        p = ModelParams(delta=0.6, r=0.25, g=0.28714024510386649, q=0.25)
        res = diagonalize(p, 1200, energy_range=(1.7786, 1.7788), strict_parity=False)
        assert res.energies.size == 2
        assert abs(res.energies[1] - res.energies[0]) < 1e-9

    def test_window_helper(self):
        res = diagonalize(ModelParams(delta=0.5, r=0.2, g=0.2), 300, n_lowest=8)
        cut = res.window(0.0, 4.0)
        assert ((cut.energies > 0.0) & (cut.energies < 4.0)).all()


class TestEdLevels:
    def test_doubles_until_stable(self):
        p = ModelParams(delta=0.5, r=0.2, g=0.2)
        res = ed_levels(p, (-1.0, 3.0), dim=200, rtol=1e-10)
        assert res.dim >= 400  # at least one doubling to confirm
        ref = diagonalize(p, 2000, energy_range=(-1.0, 3.0))
        np.testing.assert_allclose(np.sort(res.energies), np.sort(ref.energies), atol=1e-9)


class TestRwa:
    def test_closed_form_matches_ed(self):
        p = ModelParams(delta=1.0, r=0.0, g=0.6, q=0.25)
        ed = diagonalize(p, 1200, n_lowest=12)
        energies, parities = rwa_spectrum(1.0, 0.6, 0.25, n_max=40)
        np.testing.assert_allclose(ed.energies, energies[:12], atol=1e-12)
        assert (ed.parities == parities[:12]).all()

    def test_q34_singleton(self):
        energies, parities = rwa_spectrum(0.8, 0.3, 0.75, n_max=20)
        # unpaired |down, k0=1> state at k0 - delta/2
        idx = int(np.argmin(np.abs(energies - (1.0 - 0.4))))
        assert energies[idx] == pytest.approx(0.6)
        assert parities[idx] == -1


class TestCriticalPositivity:
    @pytest.mark.parametrize("r", [0.25, 1.0])
    def test_bounded_below_at_collapse(self, r):
        assert critical_min_eigenvalue(r, dim=400) >= -1e-10

    def test_rejects_r_outside_unit_interval(self):
        with pytest.raises(InvalidParams):
            critical_quadratic_form(1.5, 50)

    def test_form_is_symmetric(self):
        m = critical_quadratic_form(0.5, 40)
        np.testing.assert_allclose(m, m.T, atol=1e-14)
