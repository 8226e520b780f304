"""G-functions: transcendental spectral conditions on the pole ladder frame.

For each subspace q and parity p the function

    G_p(E) = sum_n (Lam_n(E) + p * xi_n(E))

is analytic between consecutive ladder poles and its zeros are the regular
spectrum.  Pinning E to a ladder pole and restarting the recurrence there
yields the exceptional variant whose zeros in g mark levels crossing that
pole line (used for bound-state counting toward the collapse point).

The degeneracy function F_n(g) closes the recurrence exactly on pole n;
its roots in g are the doubly degenerate (level-crossing) points.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from . import _kernels
from .errors import InvalidParams
from .model import (
    BogoliubovFrame,
    ModelParams,
    collapse_coupling,
    derive_frame,
    frame_from_distance,
)
from .recurrence import (
    check_pole_guard,
    collapse_series,
    estimate_min_truncation,
    log_prefactor,
    nearest_pole,
    pole_branch_pairs,
)

#: default series tolerance for the converged flag
DEFAULT_TOL = 1e-12
#: default floor on the truncation of regular evaluations
MIN_TRUNCATION = 1000
#: relative distance to g_c below which double precision loses the frame
PRECISION_FLOOR_EPS = 1e-15


@dataclass(frozen=True)
class GEvaluation:
    """One G-function value with its truncation diagnostics."""

    value: float
    parity: int
    truncation_requested: int
    truncation_used: int
    tail: float
    converged: bool
    pole_distance: float
    n_star: int
    precision_floor: bool = False


def _effective_truncation(n_terms: int | None, n_star: int) -> int:
    requested = 0 if n_terms is None else int(n_terms)
    return max(requested, 2 * n_star, MIN_TRUNCATION)


def _wrap(value, parity, requested, used, tail, tol, pole_distance, n_star, floor=False):
    converged = tail <= tol * max(1.0, abs(value))
    return GEvaluation(
        value=float(value),
        parity=parity,
        truncation_requested=requested,
        truncation_used=int(used),
        tail=float(tail),
        converged=bool(converged),
        pole_distance=float(pole_distance),
        n_star=int(n_star),
        precision_floor=floor,
    )


def g_function_pair(
    p: ModelParams,
    energy: float,
    n_terms: int | None = None,
    tol: float = DEFAULT_TOL,
) -> tuple[GEvaluation, GEvaluation]:
    """Both parity G values at one energy (they share one recurrence run)."""
    f = derive_frame(p)
    check_pole_guard(p, energy)
    n_star = estimate_min_truncation(p, energy)
    n_eff = _effective_truncation(n_terms, n_star)
    sp, sm, tail, used = _kernels.g_sums(
        p.delta,
        p.r,
        p.q,
        p.g,
        energy,
        f.beta_plus,
        f.beta_minus,
        f.tanh_theta,
        0,
        0.0,
        False,
        n_eff,
        max(2 * n_star, 16),
    )
    _, dist = nearest_pole(p, energy)
    plus = _wrap(sp, +1, n_eff, used, tail, tol, dist, n_star)
    minus = _wrap(sm, -1, n_eff, used, tail, tol, dist, n_star)
    return plus, minus


def g_function(
    p: ModelParams,
    energy: float,
    n_terms: int | None = None,
    tol: float = DEFAULT_TOL,
) -> GEvaluation:
    """G value for the parity carried by p."""
    plus, minus = g_function_pair(p, energy, n_terms=n_terms, tol=tol)
    return plus if p.parity == +1 else minus


def g_function_grid(
    p: ModelParams,
    energies: np.ndarray,
    n_terms: int | None = None,
):
    """Vectorised G values over an energy grid.

    Returns (g_plus, g_minus, tails, used) arrays; energies must respect the
    pole guard (the level scanner builds its grids that way).
    """
    f = derive_frame(p)
    energies = np.asarray(energies, dtype=float)
    if energies.size == 0:
        z = np.empty(0)
        return z, z.copy(), z.copy(), np.empty(0, np.int64)
    n_star = max(
        estimate_min_truncation(p, float(energies.min())),
        estimate_min_truncation(p, float(energies.max())),
    )
    n_eff = _effective_truncation(n_terms, n_star)
    return _kernels.g_sums_grid(
        p.delta,
        p.r,
        p.q,
        p.g,
        energies,
        f.beta_plus,
        f.beta_minus,
        f.tanh_theta,
        n_eff,
        max(2 * n_star, 16),
    )


def _restart_weight(m: int, q: float, tanh_theta: float) -> float:
    """Leading coefficient Lam_m of the restarted series."""
    if tanh_theta == 0.0:
        return 1.0 if m == 0 else 0.0
    return math.exp(log_prefactor(m, q) + m * math.log(tanh_theta))


def exceptional_g_function(
    delta: float,
    r: float,
    q: float,
    m: int,
    g: float | None = None,
    eps: float | None = None,
    parity: int = +1,
    n_terms: int = 10**5,
    tol: float = DEFAULT_TOL,
) -> GEvaluation:
    """Restarted G value on pole line m at coupling g (or eps = 1 - g/g_c).

    Passing eps derives the frame without the near-critical cancellation and
    is how the scans probe couplings exponentially close to g_c.  Probes with
    eps below the double-precision floor are computed anyway but flagged.
    """
    if m < 0:
        raise InvalidParams(f"pole index must be >= 0, got {m!r}")
    if (g is None) == (eps is None):
        raise InvalidParams("pass exactly one of g, eps")
    if eps is None:
        g_crit = collapse_coupling(r)
        if not (0.0 < g < g_crit):
            raise InvalidParams(f"need 0 < g < g_c = {g_crit!r}, got {g!r}")
        eps = 1.0 - g / g_crit
    frame = frame_from_distance(r, eps)
    g_val = frame.g_crit * (1.0 - eps)
    floor = eps < PRECISION_FLOOR_EPS
    energy = 2.0 * (m + q) * frame.beta_plus * frame.beta_minus - 0.5
    lam0 = _restart_weight(m, q, frame.tanh_theta)
    sp, sm, tail, used = _kernels.g_sums(
        delta,
        r,
        q,
        g_val,
        energy,
        frame.beta_plus,
        frame.beta_minus,
        frame.tanh_theta,
        m,
        lam0,
        True,
        int(n_terms),
        max(64, 4 * m),
    )
    value = sp if parity == +1 else sm
    return _wrap(value, parity, int(n_terms), used, tail, tol, 0.0, m, floor)


@dataclass(frozen=True)
class ExceptionalScan:
    """Restarted-G values over a grid of near-critical couplings."""

    x: np.ndarray  # -log10(1 - g/g_c)
    g: np.ndarray
    g_plus: np.ndarray
    g_minus: np.ndarray
    tail: np.ndarray
    converged: np.ndarray
    precision_floor: np.ndarray
    truncation: int


def exceptional_scan(
    delta: float,
    r: float,
    q: float,
    m: int,
    x_grid: np.ndarray,
    n_terms: int = 10**5,
    tol: float = DEFAULT_TOL,
) -> ExceptionalScan:
    """Evaluate the restarted G over x = -log10(1 - g/g_c) probes."""
    x_grid = np.asarray(x_grid, dtype=float)
    eps = np.power(10.0, -x_grid)
    k = x_grid.size
    g_arr = np.empty(k)
    bp = np.empty(k)
    bm = np.empty(k)
    th = np.empty(k)
    lam0 = np.empty(k)
    for i in range(k):
        fr = frame_from_distance(r, float(eps[i]))
        g_arr[i] = fr.g_crit * (1.0 - eps[i])
        bp[i] = fr.beta_plus
        bm[i] = fr.beta_minus
        th[i] = fr.tanh_theta
        lam0[i] = _restart_weight(m, q, fr.tanh_theta)
    sp, sm, tails, _ = _kernels.exceptional_sums_grid(
        delta, r, q, m, g_arr, bp, bm, th, lam0, int(n_terms), max(64, 4 * m)
    )
    scale = np.maximum(1.0, np.maximum(np.abs(sp), np.abs(sm)))
    return ExceptionalScan(
        x=x_grid,
        g=g_arr,
        g_plus=sp,
        g_minus=sm,
        tail=tails,
        converged=tails <= tol * scale,
        precision_floor=eps < PRECISION_FLOOR_EPS,
        truncation=int(n_terms),
    )


def _degeneracy_sum(fs, delta, r, q, n, g, beta_minus) -> float:
    """Closed finite sum whose roots are the level crossings on pole n.

    The (1+r)/(1-r) piece is folded together with the x^{n-i} power so the
    isotropic limit r -> 1 stays finite (every cross term then vanishes and
    the sum collapses to delta/2 * f_n).
    """
    sq4 = 4.0 * math.sqrt(r) * beta_minus
    x = g * (1.0 - r) ** 2 / sq4
    head = 0.5 * delta - 2.0 * g * g * (1.0 - r * r) * (n + q)
    terms = []
    for i in range(n + 1):
        k = n - i
        inv_fact = 1.0 / math.factorial(k)
        term = fs[i] * inv_fact * (x**k) * head
        if k >= 1:
            # x^k / (1-r), written to stay regular for r >= 1
            xk_over_u = (g**k) * (1.0 - r) ** (2 * k - 1) / (sq4**k)
            term += fs[i] * inv_fact * 2.0 * k * (1.0 + r) * xk_over_u
        terms.append(term)
    return math.fsum(terms)


def degeneracy_function(delta: float, r: float, q: float, n: int, g: float) -> float:
    """F_n(g); a root in (0, g_c) is a doubly degenerate point on pole n."""
    if q not in (0.25, 0.75):
        raise InvalidParams(f"q must be 0.25 or 0.75, got {q!r}")
    g_crit = collapse_coupling(r)
    if not (0.0 < g < g_crit):
        raise InvalidParams(f"need 0 < g < g_c = {g_crit!r}, got {g!r}")
    _, fs = pole_branch_pairs(delta, r, q, g, n)
    bm = math.sqrt(1.0 - g * g * (1.0 - r) ** 2)
    return _degeneracy_sum(fs, delta, r, q, n, g, bm)


def degeneracy_function_at_collapse(delta: float, r: float, q: float, n: int) -> float:
    """F_n evaluated exactly at g = g_c with the collapse coefficients."""
    if q not in (0.25, 0.75):
        raise InvalidParams(f"q must be 0.25 or 0.75, got {q!r}")
    if not (r > 0.0):
        raise InvalidParams(f"need r > 0, got {r!r}")
    g_crit = collapse_coupling(r)
    fs = collapse_series(n, q=q).second
    # beta_minus(g_c) = 2 sqrt(r)/(1+r), exact
    bm = 2.0 * math.sqrt(r) / (1.0 + r)
    return _degeneracy_sum(fs, delta, r, q, n, g_crit, bm)


def degeneracy_scale(r: float, n: int) -> float:
    """[(1+r)^2/(8r)]^n, the natural magnitude of F_n at the collapse point."""
    return ((1.0 + r) ** 2 / (8.0 * r)) ** n


def partial_sums(series, parity: int, compensated: bool = True) -> float:
    """Sum a stored rescaled series for one parity.

    compensated=False reproduces a plain left-to-right accumulation for
    regression against the compensated path.
    """
    if series.kind != "rescaled":
        raise InvalidParams("partial_sums needs a rescaled series")
    terms = series.first + parity * series.second
    if not compensated:
        total = 0.0
        for t in terms:
            total += float(t)
        return total
    total = 0.0
    comp = 0.0
    for t in terms:
        y = float(t) - comp
        s = total + y
        comp = (s - total) - y
        total = s
    return total


def frame_or_distance(
    r: float, g: float | None, eps: float | None
) -> tuple[BogoliubovFrame, float]:
    """Resolve a (g, eps) pair into a frame and the eps actually used."""
    if (g is None) == (eps is None):
        raise InvalidParams("pass exactly one of g, eps")
    if eps is None:
        g_crit = collapse_coupling(r)
        eps = 1.0 - g / g_crit
        if not (0.0 < eps <= 1.0):
            raise InvalidParams(f"need 0 < g < g_c, got g={g!r}")
    return frame_from_distance(r, eps), eps
