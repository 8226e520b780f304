"""Compiled inner loops for the series evaluations.

The two-term recurrence is streamed with a two-deep window and the partial
sums of Lam_n +/- xi_n are accumulated with Kahan compensation (fastmath is
deliberately off so the compensation survives).  Early termination fires only
at a machine-level floor, so a truncated evaluation equals the full-length
one to roundoff; the truncation ladders used by the scans keep their meaning.

When numba is unavailable the same code runs interpreted (slow but correct).
"""

from __future__ import annotations

import math

import numpy as np

try:
    from numba import njit

    HAVE_NUMBA = True
except ImportError:  # pragma: no cover - environment without numba
    HAVE_NUMBA = False

    def njit(*args, **kwargs):
        if len(args) == 1 and callable(args[0]):
            return args[0]

        def wrap(f):
            return f

        return wrap


#: consecutive sub-floor increments required before an early stop
STOP_CONSEC = 16
#: relative floor for the early stop (machine-converged partial sums only)
STOP_REL = 1e-17


@njit(cache=True)
def g_sums(
    delta,
    r,
    q,
    g,
    energy,
    bp,
    bm,
    th,
    start_n,
    lam_start,
    fixed_start,
    n_max,
    n_min,
):
    """Stream the rescaled recurrence and return both parity sums.

    fixed_start=False: regular series, xi_start=1 at n=0.
    fixed_start=True: restarted series, Lam_{start_n}=lam_start, xi=0
    (energy is then a ladder pole and the shifted denominators never vanish).

    Returns (sum_plus, sum_minus, tail, n_used) where tail is the magnitude
    of the last accumulated increment.
    """
    sq = math.sqrt(r)
    two_bb = 2.0 * bp * bm
    cross = g * (1.0 - r) / (2.0 * sq)
    shift = 2.0 * g * g * (1.0 - r * r)
    c_e = 0.5 + energy
    sum_p = 0.0
    comp_p = 0.0
    sum_m = 0.0
    comp_m = 0.0
    lam_prev = 0.0
    xi_prev = 0.0
    xi = 1.0
    lam = 0.0
    consec = 0
    tail = 0.0
    n_used = start_n
    for n in range(start_n, n_max + 1):
        if n == start_n and fixed_start:
            lam = lam_start
            xi = 0.0
        else:
            denom = two_bb * (n + q) - c_e
            lam = (0.5 * delta - shift * (n + q)) * xi / denom
            if n >= 1:
                lam = lam + (
                    cross
                    * ((1.0 + r) * bm * xi_prev - (1.0 - r) * bp * lam_prev)
                    / denom
                    * (2.0 * (n + q - 0.25) * (n + q - 0.75) / n)
                    * th
                )
        t_p = lam + xi
        y = t_p - comp_p
        t = sum_p + y
        comp_p = (t - sum_p) - y
        sum_p = t
        t_m = lam - xi
        y = t_m - comp_m
        t = sum_m + y
        comp_m = (t - sum_m) - y
        sum_m = t
        inc = abs(t_p)
        if abs(t_m) > inc:
            inc = abs(t_m)
        tail = inc
        n_used = n
        scale = abs(sum_p) + abs(sum_m) + 1.0
        if n >= n_min and inc <= STOP_REL * scale:
            consec += 1
            if consec >= STOP_CONSEC:
                break
        else:
            consec = 0
        step = th / (4.0 * sq * g * (n + 1.0))
        xi_next = (
            (-0.5 * delta - shift * (n + q)) * bp * lam * step
            + (2.0 * (n + q) * bm * (2.0 - bp * bp) - c_e * bp) * xi * step
        )
        if n >= 1:
            xi_next = xi_next + (
                (1.0 + r)
                * ((1.0 - r) * bp * bm * lam_prev - (1.0 + r) * bm * bm * xi_prev)
                * (n + q - 0.25)
                * (n + q - 0.75)
                * th
                * th
                / (4.0 * r * n * (n + 1.0))
            )
        lam_prev = lam
        xi_prev = xi
        xi = xi_next
    return sum_p, sum_m, tail, n_used


@njit(cache=True)
def g_sums_grid(delta, r, q, g, energies, bp, bm, th, n_max, n_min):
    """Regular series sums over an energy grid (shared truncation)."""
    m = energies.size
    out_p = np.empty(m)
    out_m = np.empty(m)
    tails = np.empty(m)
    used = np.empty(m, np.int64)
    for i in range(m):
        sp, sm, tail, n_used = g_sums(
            delta, r, q, g, energies[i], bp, bm, th, 0, 0.0, False, n_max, n_min
        )
        out_p[i] = sp
        out_m[i] = sm
        tails[i] = tail
        used[i] = n_used
    return out_p, out_m, tails, used


@njit(cache=True)
def exceptional_sums_grid(
    delta, r, q, m_pole, g_arr, bp_arr, bm_arr, th_arr, lam0_arr, n_max, n_min
):
    """Restarted series sums over a coupling grid (one ladder pole)."""
    k = g_arr.size
    out_p = np.empty(k)
    out_m = np.empty(k)
    tails = np.empty(k)
    used = np.empty(k, np.int64)
    for i in range(k):
        energy = 2.0 * (m_pole + q) * bp_arr[i] * bm_arr[i] - 0.5
        sp, sm, tail, n_used = g_sums(
            delta,
            r,
            q,
            g_arr[i],
            energy,
            bp_arr[i],
            bm_arr[i],
            th_arr[i],
            m_pole,
            lam0_arr[i],
            True,
            n_max,
            n_min,
        )
        out_p[i] = sp
        out_m[i] = sm
        tails[i] = tail
        used[i] = n_used
    return out_p, out_m, tails, used


def warmup() -> None:
    """Trigger JIT compilation of the kernels (cached across sessions)."""
    e = np.array([0.1, 0.2])
    g_sums_grid(0.5, 0.2, 0.25, 0.2, e, 0.97, 0.98, 0.1, 64, 4)
    arr = np.array([0.2, 0.21])
    ones = np.ones(2)
    exceptional_sums_grid(
        0.5, 0.2, 0.25, 0, arr, 0.97 * ones, 0.98 * ones, 0.1 * ones, ones, 64, 4
    )
