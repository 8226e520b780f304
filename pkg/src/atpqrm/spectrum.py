"""Spectrum assembly on top of the series evaluators.

Regular levels are zeros of the G-function, pinched between consecutive
ladder poles, so root finding works interval by interval: sample the sign
pattern, refine until it is stable, then polish each bracket.  Degenerate
(level-crossing) points come from roots of the closing function F_n in g,
and the near-critical bound-state census comes from zeros of the restarted
G-function along the lowest pole line.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.optimize import brentq

from . import _kernels, fock
from .errors import InsufficientPoints, InvalidParams, NoCrossing
from .gfunction import (
    DEFAULT_TOL,
    degeneracy_function,
    exceptional_g_function,
    exceptional_scan,
    g_function_grid,
)
from .model import ModelParams, collapse_coupling, derive_frame, pole_energy
from .recurrence import estimate_min_truncation, pole_guard_width

#: initial samples per pole interval; doubled until the sign pattern is stable
SCAN_SAMPLES = 64
#: refinement rounds before an interval is reported unresolved
MAX_REFINE = 6
#: x = -log10(1 - g/g_c) beyond which double precision loses the frame
X_PRECISION_FLOOR = 15.0


@dataclass(frozen=True)
class EnergyLevel:
    """One eigenvalue with its bookkeeping.

    pole_interval n means the energy lies between ladder poles n-1 and n
    (n = 0: below the lowest pole).  degenerate_with is set on exceptional
    levels that sit exactly on a pole line together with a partner of the
    opposite branch label.
    """

    energy: float
    q: float
    parity: int
    pole_interval: int
    degenerate_with: int | None = None


@dataclass(frozen=True)
class DegeneratePoint:
    """Coupling at which a level pair crosses on the n-th pole line."""

    n: int
    g_value: float
    energy: float
    q: float


@dataclass(frozen=True)
class LevelSet:
    params: ModelParams
    levels: tuple[EnergyLevel, ...]
    diagnostics: dict = field(default_factory=dict)

    def energies(self, parity: int | None = None) -> np.ndarray:
        if parity is None:
            return np.array([lv.energy for lv in self.levels])
        return np.array([lv.energy for lv in self.levels if lv.parity == parity])


def _interval_index(energy: float, q: float, spacing: float) -> int:
    # number of poles strictly below this energy
    return max(0, math.ceil((energy + 0.5) / spacing - q))


def _interval_grid(lo, hi, n, lo_is_pole, hi_is_pole):
    span = hi - lo
    margin_lo = 10.0 * pole_guard_width(lo) if lo_is_pole else 0.0
    margin_hi = 10.0 * pole_guard_width(hi) if hi_is_pole else 0.0
    a = lo + margin_lo
    b = hi - margin_hi
    if b <= a:
        return np.empty(0)
    pts = [np.linspace(a, b, n)]
    # geometric approach to pole endpoints: levels hug the poles near
    # crossings, uniform sampling alone walks right past them
    offsets = span * np.power(10.0, -np.arange(1, 12, dtype=float))
    if lo_is_pole:
        extra = lo + offsets
        pts.append(extra[(extra > a) & (extra < b)])
    if hi_is_pole:
        extra = hi - offsets
        pts.append(extra[(extra > a) & (extra < b)])
    grid = np.unique(np.concatenate(pts))
    return grid


def _bracket_signs(values: np.ndarray) -> list[tuple[int, int]]:
    s = np.sign(values)
    out = []
    for i in range(len(s) - 1):
        if s[i] != 0 and s[i + 1] != 0 and s[i] != s[i + 1]:
            out.append((i, i + 1))
        elif s[i + 1] == 0:
            out.append((i + 1, i + 1))
    return out


def _scan_interval(p, lo, hi, lo_is_pole, hi_is_pole, n_terms, diagnostics, index):
    """Stable sign-change brackets for both branches over one pole interval."""
    n = SCAN_SAMPLES
    history: list[tuple[int, int]] = []
    grid = values = None
    for _ in range(MAX_REFINE):
        grid = _interval_grid(lo, hi, n, lo_is_pole, hi_is_pole)
        if grid.size == 0:
            return None
        gp, gm, _, _ = g_function_grid(p, grid, n_terms=n_terms)
        values = (gp, gm)
        counts = (len(_bracket_signs(gp)), len(_bracket_signs(gm)))
        history.append(counts)
        if len(history) >= 3 and history[-1] == history[-2] == history[-3]:
            return grid, values
        n *= 2
    diagnostics.setdefault("unresolved_intervals", []).append(
        {"interval": index, "counts_history": history}
    )
    return grid, values


def _polish(p, frame, lo, hi, parity, n_terms):
    def f(e):
        sp, sm, _, _ = _kernels.g_sums(
            p.delta, p.r, p.q, p.g, e,
            frame.beta_plus, frame.beta_minus, frame.tanh_theta,
            0, 0.0, False, n_terms, 16,
        )
        return sp if parity == +1 else sm

    return brentq(f, lo, hi, xtol=1e-13, rtol=8.9e-16)


def _decoupled_levels(p: ModelParams, lo: float, hi: float) -> LevelSet:
    """Exact levels at zero coupling: bare rungs split by the qubit term."""
    k0 = 0 if p.q == 0.25 else 1
    spacing = 2.0
    levels = []
    j = 0
    while k0 + 2 * j - abs(p.delta) / 2 <= hi:
        k = k0 + 2 * j
        sign = 1 if j % 2 == 0 else -1
        for energy, parity in ((k + p.delta / 2, sign), (k - p.delta / 2, -sign)):
            if lo < energy < hi:
                levels.append(
                    EnergyLevel(energy, p.q, parity, _interval_index(energy, p.q, spacing))
                )
        j += 1
    levels.sort(key=lambda lv: lv.energy)
    return LevelSet(p, tuple(levels), {"route": "decoupled"})


def _rwa_levels(p: ModelParams, lo: float, hi: float) -> LevelSet:
    """Closed-form levels for the r = 0 model (see fock.rwa_spectrum)."""
    # lower block branch grows like (2n+1)(1-g); pick n_max to clear the window
    if p.g < 1.0:
        n_max = int((abs(hi) + abs(lo) + 4.0) / (1.0 - p.g)) + 8
    else:
        n_max = 20000
    energies, parities = fock.rwa_spectrum(p.delta, p.g, q=p.q, n_max=n_max)
    keep = (energies > lo) & (energies < hi)
    levels = tuple(
        EnergyLevel(float(e), p.q, int(s), 0)
        for e, s in zip(energies[keep], parities[keep])
    )
    return LevelSet(p, levels, {"route": "rwa", "n_blocks": n_max})


def _degenerate_partner_levels(p: ModelParams, pole_indices, levels, diagnostics):
    """Detect pole-line crossings sitting exactly at this coupling."""
    for k in pole_indices:
        g = p.g
        w = 1e-6 * g
        a, b = g - w, min(g + w, collapse_coupling(p.r) * (1.0 - 1e-15))
        if b <= a:
            continue
        fa = degeneracy_function(p.delta, p.r, p.q, k, a)
        fb = degeneracy_function(p.delta, p.r, p.q, k, b)
        if fa == 0.0 or fb == 0.0 or (fa < 0) != (fb < 0):
            root = brentq(
                lambda x: degeneracy_function(p.delta, p.r, p.q, k, x), a, b,
                xtol=1e-15, rtol=8.9e-16,
            )
            if abs(root - g) <= 1e-9 * max(1.0, g):
                energy = pole_energy(k, p)
                for parity in (+1, -1):
                    levels.append(
                        EnergyLevel(energy, p.q, parity, k, degenerate_with=-parity)
                    )
                diagnostics.setdefault("degenerate_poles", []).append(k)


def find_levels(
    p: ModelParams,
    energy_range: tuple[float, float],
    n_terms: int | None = None,
    tol: float = DEFAULT_TOL,
) -> LevelSet:
    """All eigenvalues in an energy window at fixed parameters.

    Every pole interval intersecting the window (including the region below
    the lowest pole) is scanned for sign changes of both G branches; stable
    brackets are polished to machine precision.  Exceptional levels lying
    exactly on a pole line are added when the closing function has a root at
    this coupling.  The two exactly solvable edges are served in closed form:
    g = 0 (decoupled) and r = 0 (number-conserving pairing model).
    """
    lo, hi = float(energy_range[0]), float(energy_range[1])
    if not lo < hi:
        raise InvalidParams(f"empty energy range {energy_range!r}")
    if p.g == 0.0:
        return _decoupled_levels(p, lo, hi)
    if p.r == 0.0:
        return _rwa_levels(p, lo, hi)

    frame = derive_frame(p)
    spacing = 2.0 * frame.beta_plus * frame.beta_minus
    n_star = max(estimate_min_truncation(p, lo), estimate_min_truncation(p, hi))
    n_eff = max(n_terms or 0, 2 * n_star, 1000)

    first = _interval_index(lo, p.q, spacing)
    last = _interval_index(hi, p.q, spacing)  # poles first..last-1 lie inside
    edges = [lo] + [pole_energy(k, p) for k in range(first, last)] + [hi]
    pole_flags = [False] + [True] * (last - first) + [False]

    diagnostics: dict = {"n_terms": n_eff, "spacing": spacing}
    levels: list[EnergyLevel] = []
    for i in range(len(edges) - 1):
        a, b, a_pole, b_pole = edges[i], edges[i + 1], pole_flags[i], pole_flags[i + 1]
        scan = _scan_interval(p, a, b, a_pole, b_pole, n_eff, diagnostics, first + i)
        if scan is None:
            continue
        grid, (gp, gm) = scan
        for parity, vals in ((+1, gp), (-1, gm)):
            roots = []
            for iL, iR in _bracket_signs(vals):
                if iL == iR:
                    roots.append(float(grid[iL]))
                else:
                    roots.append(
                        _polish(p, frame, float(grid[iL]), float(grid[iR]), parity, n_eff)
                    )
            if len(roots) > 1:
                diagnostics.setdefault("multi_level_intervals", []).append(
                    {"interval": first + i, "parity": parity, "count": len(roots)}
                )
            for root in roots:
                levels.append(EnergyLevel(root, p.q, parity, first + i))

    _degenerate_partner_levels(p, range(first, last), levels, diagnostics)
    levels.sort(key=lambda lv: lv.energy)
    return LevelSet(p, tuple(levels), diagnostics)


def _coupling_grid(g_lo, g_hi, g_crit, samples):
    """Uniform samples plus a geometric tail hugging the collapse coupling."""
    pts = [np.linspace(g_lo, g_hi, samples)]
    tail = g_crit * (1.0 - np.power(10.0, -np.linspace(1, 12, 34)))
    pts.append(tail[(tail > g_lo) & (tail < g_hi)])
    return np.unique(np.concatenate(pts))


def find_degenerate_points(
    delta: float,
    r: float,
    q: float,
    n: int,
    g_range: tuple[float, float] | None = None,
    tol: float = 1e-13,
    samples: int = 256,
) -> list[DegeneratePoint]:
    """All roots of the pole-n closing function in a coupling range.

    Roots can sit arbitrarily close to the collapse coupling (exactly at it
    when the splitting hits its critical value), hence the geometric tail in
    the scan grid.  Empty result is a valid outcome.
    """
    g_crit = collapse_coupling(r)
    if g_range is None:
        g_range = (1e-6 * g_crit, g_crit * (1.0 - 1e-13))
    g_lo, g_hi = g_range
    if not (0.0 < g_lo < g_hi < g_crit):
        raise InvalidParams(f"g_range {g_range!r} not inside (0, g_c={g_crit!r})")

    def f(g):
        return degeneracy_function(delta, r, q, n, g)

    prev_count = -1
    stable = 0
    while True:
        grid = _coupling_grid(g_lo, g_hi, g_crit, samples)
        vals = np.array([f(g) for g in grid])
        brackets = _bracket_signs(vals)
        if len(brackets) == prev_count:
            stable += 1
            if stable >= 2:
                break
        else:
            stable = 0
        prev_count = len(brackets)
        samples *= 2
        if samples > 16384:
            break

    points = []
    for iL, iR in brackets:
        if iL == iR:
            root = float(grid[iL])
        else:
            root = brentq(f, float(grid[iL]), float(grid[iR]), xtol=tol, rtol=8.9e-16)
        p_at = ModelParams(delta=delta, r=r, g=root, q=q)
        points.append(DegeneratePoint(n=n, g_value=root, energy=pole_energy(n, p_at), q=q))
    points.sort(key=lambda d: d.g_value)
    return points


def last_crossing(
    delta: float,
    r: float,
    q: float,
    n: int,
    g_range: tuple[float, float] | None = None,
    tol: float = 1e-13,
) -> DegeneratePoint:
    """Largest-coupling degenerate point on pole line n; NoCrossing if none."""
    points = find_degenerate_points(delta, r, q, n, g_range=g_range, tol=tol)
    if not points:
        raise NoCrossing(
            f"no degenerate point on pole line {n} for delta={delta!r}, r={r!r}, q={q!r}"
        )
    return points[-1]


@dataclass(frozen=True)
class ExceptionalZeros:
    """Zeros of the restarted G-function along one pole line.

    x values are -log10(1 - g/g_c).  Counts may grow with truncation: a
    finite series only resolves zeros whose scale it has reached, so each
    count is a lower bound tied to its truncation.
    """

    delta: float
    r: float
    q: float
    m: int
    parity: int
    truncations: tuple[int, ...]
    zeros_x: dict[int, tuple[float, ...]]
    precision_floor: bool

    def count(self, truncation: int) -> int:
        return len(self.zeros_x[truncation])


def _refine_exceptional_zero(delta, r, q, m, parity, n_terms, x_lo, x_hi, xtol):
    def f(x):
        return exceptional_g_function(
            delta, r, q, m, eps=10.0 ** (-x), parity=parity, n_terms=n_terms
        ).value

    return brentq(f, x_lo, x_hi, xtol=xtol)


def count_bound_states_via_exceptional(
    delta: float,
    r: float,
    q: float = 0.25,
    m: int = 0,
    parity: int = +1,
    truncations: tuple[int, ...] = (10**5, 10**6),
    x_range: tuple[float, float] = (0.5, X_PRECISION_FLOOR),
    samples_per_unit: int = 64,
    xtol: float = 1e-6,
) -> ExceptionalZeros:
    """Census of levels crossing pole line m on the way to the collapse point.

    Scans the restarted G-function over x = -log10(1 - g/g_c) at each
    truncation and polishes every sign change.  Only converged samples count:
    the unconverged tail of a truncated series produces spurious wiggles.
    The precision_floor flag reports probes beyond the double-precision limit
    of the frame (x > 15).
    """
    x_lo, x_hi = x_range
    n_pts = max(16, int((x_hi - x_lo) * samples_per_unit)) + 1
    x_grid = np.linspace(x_lo, x_hi, n_pts)
    zeros: dict[int, tuple[float, ...]] = {}
    floor_seen = False
    for n_tr in truncations:
        scan = exceptional_scan(delta, r, q, m, x_grid, n_terms=int(n_tr))
        floor_seen = floor_seen or bool(scan.precision_floor.any())
        usable = scan.converged & ~scan.precision_floor
        branch = scan.g_plus if parity == +1 else scan.g_minus
        found = []
        for iL, iR in _bracket_signs(branch):
            if not (usable[iL] and usable[iR]):
                continue
            if iL == iR:
                found.append(float(x_grid[iL]))
            else:
                found.append(
                    _refine_exceptional_zero(
                        delta, r, q, m, parity, int(n_tr),
                        float(x_grid[iL]), float(x_grid[iR]), xtol,
                    )
                )
        zeros[int(n_tr)] = tuple(sorted(found))
    return ExceptionalZeros(
        delta=delta, r=r, q=q, m=m, parity=parity,
        truncations=tuple(int(n) for n in truncations),
        zeros_x=zeros, precision_floor=floor_seen,
    )


@dataclass(frozen=True)
class SpacingFit:
    """Linear fit of -ln(1 - g_m/g_c) against the zero index."""

    mu: float
    mu0: float
    residuals: np.ndarray
    max_rel_residual: float


def fit_exponential_spacing(
    zeros_g: np.ndarray | None = None,
    g_crit: float | None = None,
    zeros_x: np.ndarray | None = None,
) -> SpacingFit:
    """Fit the geometric clustering law g_m = g_c(1 - exp(-m*mu + mu0)).

    Accepts either couplings (with g_crit) or x = -log10(1 - g/g_c) values
    directly.  Residuals are reported relative to the mean spacing mu.
    """
    if zeros_x is not None:
        u = np.asarray(zeros_x, dtype=float) * math.log(10.0)
    elif zeros_g is not None and g_crit is not None:
        u = -np.log(1.0 - np.asarray(zeros_g, dtype=float) / g_crit)
    else:
        raise InvalidParams("pass zeros_g with g_crit, or zeros_x")
    if u.size < 3:
        raise InsufficientPoints(f"need at least 3 zeros, got {u.size}")
    m = np.arange(u.size, dtype=float)
    slope, intercept = np.polyfit(m, u, 1)
    residuals = u - (slope * m + intercept)
    return SpacingFit(
        mu=float(slope),
        mu0=float(-intercept),
        residuals=residuals,
        max_rel_residual=float(np.max(np.abs(residuals)) / abs(slope)),
    )


def scale_spectrum(p: ModelParams, energies) -> np.ndarray:
    """Map E to the pole-aligned coordinate (E + 1/2)/(2 b+ b-) - q.

    Pole line n sits at the integer n in this coordinate for every coupling,
    which is what makes level crossings visible on a common grid.
    """
    f = derive_frame(p)
    e = np.asarray(energies, dtype=float)
    return (e + 0.5) / (2.0 * f.beta_plus * f.beta_minus) - p.q
