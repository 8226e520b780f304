"""Truncated Fock-space diagonalisation.

Independent cross-check for the series route.  Each photon-parity subspace is
spanned by the interleaved rungs

    index 2j   -> |up,   k0 + 2j>
    index 2j+1 -> |down, k0 + 2j>

with k0 = 0 for q = 1/4 and k0 = 1 for q = 3/4.  The Hamiltonian is then a
real symmetric banded matrix of bandwidth 3 (band 2 empty), and the subspace
reflection that splits the spectrum into the two G-function branches is
diagonal with entries +(-1)^j on even indices and -(-1)^j on odd ones.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.linalg import eig_banded, eigh

from .errors import AmbiguousParity, InvalidParams, NoConvergence
from .model import ModelParams

#: minimum |<parity>| for an unambiguous branch label
PARITY_MARGIN = 0.99


def _k0(q: float) -> int:
    if q == 0.25:
        return 0
    if q == 0.75:
        return 1
    raise InvalidParams(f"q must be 0.25 or 0.75, got {q!r}")


def hamiltonian_bands(delta: float, r: float, g: float, q: float, size: int) -> np.ndarray:
    """Lower-banded storage (rows = diagonals 0..3) of the subspace Hamiltonian."""
    if size < 2 or size % 2:
        raise InvalidParams(f"size must be even and >= 2, got {size!r}")
    k0 = _k0(q)
    j = np.arange(size // 2)
    k = (k0 + 2 * j).astype(float)
    bands = np.zeros((4, size))
    bands[0, 0::2] = k + 0.5 * delta
    bands[0, 1::2] = k - 0.5 * delta
    hop = np.sqrt((k + 1.0) * (k + 2.0))
    # |up,k> -> |down,k+2> with weight g, row offset 3 from column 2j
    bands[3, 0:-3:2] = g * hop[:-1]
    # |down,k> -> |up,k+2> with weight r*g, row offset 1 from column 2j+1
    bands[1, 1:-1:2] = r * g * hop[:-1]
    return bands


def parity_weights(size: int) -> np.ndarray:
    """Diagonal of the subspace reflection in the interleaved basis."""
    w = np.empty(size)
    alt = np.where(np.arange(size // 2) % 2 == 0, 1.0, -1.0)
    w[0::2] = alt
    w[1::2] = -alt
    return w


def parity_expectations(vectors: np.ndarray) -> np.ndarray:
    """<reflection> for each eigenvector column."""
    w = parity_weights(vectors.shape[0])
    return w @ (vectors * vectors)


def parity_labels(vectors: np.ndarray, strict: bool = True) -> np.ndarray:
    """Branch labels +-1 per column; 0 (or a raise) when the label is unclear.

    A label only degrades at avoided-crossing-scale degeneracies where the
    eigensolver may mix the two branches; callers scanning generic parameter
    points keep strict=True.
    """
    p = parity_expectations(vectors)
    labels = np.where(p > PARITY_MARGIN, 1, np.where(p < -PARITY_MARGIN, -1, 0))
    if strict and np.any(labels == 0):
        bad = p[labels == 0]
        raise AmbiguousParity(float(bad[np.argmin(np.abs(bad))]))
    return labels.astype(int)


@dataclass(frozen=True)
class EDResult:
    """Eigenvalues of one truncated subspace with branch labels."""

    params: ModelParams
    dim: int
    energies: np.ndarray
    parities: np.ndarray

    def branch(self, parity: int) -> np.ndarray:
        return self.energies[self.parities == parity]

    def window(self, lo: float, hi: float) -> "EDResult":
        keep = (self.energies > lo) & (self.energies < hi)
        return EDResult(self.params, self.dim, self.energies[keep], self.parities[keep])


def diagonalize(
    p: ModelParams,
    dim: int,
    energy_range: tuple[float, float] | None = None,
    n_lowest: int | None = None,
    strict_parity: bool = True,
) -> EDResult:
    """Eigenpairs of the truncated subspace Hamiltonian.

    dim counts basis states (two per photon rung) and is rounded up to even.
    Restricting via energy_range or n_lowest keeps large truncations cheap;
    exactly one restriction may be given, default is the full spectrum.
    """
    size = int(dim) + (int(dim) % 2)
    bands = hamiltonian_bands(p.delta, p.r, p.g, p.q, size)
    if energy_range is not None and n_lowest is not None:
        raise InvalidParams("pass at most one of energy_range, n_lowest")
    if energy_range is not None:
        vals, vecs = eig_banded(
            bands, lower=True, select="v", select_range=energy_range
        )
    elif n_lowest is not None:
        vals, vecs = eig_banded(
            bands, lower=True, select="i", select_range=(0, int(n_lowest) - 1)
        )
    else:
        vals, vecs = eig_banded(bands, lower=True)
    labels = parity_labels(vecs, strict=strict_parity)
    return EDResult(p, size, vals, labels)


def _watched_converged(coarse: EDResult, fine: EDResult, rtol: float) -> bool:
    for parity in (-1, +1, 0):
        a = coarse.energies[coarse.parities == parity]
        b = fine.energies[fine.parities == parity]
        if a.size == 0:
            continue
        if b.size == 0:
            return False
        # nearest fine level per coarse level; set mismatch shows up as a gap
        d = np.abs(a[:, None] - b[None, :]).min(axis=1)
        if d.max() > rtol:
            return False
    return True


def ed_levels(
    p: ModelParams,
    energy_range: tuple[float, float],
    dim: int = 2000,
    rtol: float = 1e-8,
    max_dim: int = 64000,
    strict_parity: bool = True,
) -> EDResult:
    """Truncation-converged levels in an energy window.

    Doubles the basis until every watched level moves by less than rtol,
    then returns the finer result.
    """
    coarse = diagonalize(p, dim, energy_range=energy_range, strict_parity=strict_parity)
    size = coarse.dim
    while size < max_dim:
        size *= 2
        fine = diagonalize(p, size, energy_range=energy_range, strict_parity=strict_parity)
        if _watched_converged(coarse, fine, rtol):
            return fine
        coarse = fine
    raise NoConvergence(
        f"levels in {energy_range} still moving by more than {rtol} at dim {size}"
    )


def rwa_spectrum(
    delta: float,
    g: float,
    q: float = 0.25,
    n_max: int = 200,
) -> tuple[np.ndarray, np.ndarray]:
    """Closed-form levels of the r = 0 model, sorted, with branch labels.

    The r = 0 Hamiltonian only couples |up,k> to |down,k+2>, so each subspace
    splits into 2x2 blocks plus one unpaired |down,k0> state.  n_max counts
    blocks; returns (energies, parities).
    """
    k0 = _k0(q)
    energies = [float(k0) - 0.5 * delta]
    parities = [-1]
    detuning = 1.0 - 0.5 * delta
    for n in range(n_max):
        k = k0 + 2 * n
        mean = float(k + 1)
        half = math.sqrt(detuning**2 + g * g * (k + 1.0) * (k + 2.0))
        sign = 1 if n % 2 == 0 else -1
        energies.extend([mean - half, mean + half])
        parities.extend([sign, sign])
    order = np.argsort(energies, kind="stable")
    return np.asarray(energies)[order], np.asarray(parities)[order]


def critical_quadratic_form(r: float, dim: int) -> np.ndarray:
    """Fock compression of the spin-rotated Hamiltonian at the collapse point.

    At g = g_c with the splitting at its q = 1/4 critical value, a rotation
    in spin space folds the whole Hamiltonian (splitting term included, since
    that critical value happens to equal (1-r)/(1+r)) into

        [[X2, c*C], [c*C^T, P2]] - 1/2,   c = (1-r)/(1+r)

    with X2, P2 the quadrature squares and C the Fock matrix of i*x*p.  The
    bracket is positive semidefinite for 0 <= r <= 1, which is what pins the
    collapsing spectrum above -1/2; compression to a truncated basis must
    preserve that up to roundoff.  Returns the bracket (without the -1/2).
    """
    if not (0.0 <= r <= 1.0):
        raise InvalidParams(f"need 0 <= r <= 1, got {r!r}")
    a2 = np.zeros((dim, dim))
    k = np.arange(2, dim)
    a2[k - 2, k] = np.sqrt(k * (k - 1.0))
    two_n_plus_1 = np.diag(2.0 * np.arange(dim) + 1.0)
    x2 = 0.5 * (a2 + a2.T + two_n_plus_1)
    p2 = 0.5 * (-a2 - a2.T + two_n_plus_1)
    c_mat = 0.5 * (a2 - a2.T - np.eye(dim))
    c = (1.0 - r) / (1.0 + r)
    top = np.hstack([x2, c * c_mat])
    bottom = np.hstack([c * c_mat.T, p2])
    return np.vstack([top, bottom])


def critical_min_eigenvalue(r: float, dim: int = 1000) -> float:
    """Smallest eigenvalue of the compressed critical form (>= -roundoff)."""
    m = critical_quadratic_form(r, dim)
    w = eigh(m, eigvals_only=True, subset_by_index=[0, 0])
    return float(w[0])
