"""Two-term recurrences feeding the G-functions.

Each subspace q carries a pair of coefficient sequences (e_n, f_n) obeying a
coupled recurrence whose denominators vanish on the pole ladder
E_n = 2(n+q) beta+ beta- - 1/2.  The raw pair grows/decays factorially; the
rescaled pair folds the factorial prefactor and the tanh(theta) powers of the
G-series into the coefficients themselves,

    Lam_n = [2(n+q-1/4)]! / (2^n n!) * e_n * tanh(theta)^n,
    xi_n  = likewise from f_n,

so that partial sums of Lam_n +/- xi_n are the G-functions directly.

The routines here are the storing, pure-Python reference path (generic
scalars welcome); the performance path lives in _kernels.
"""

from __future__ import annotations

import csv
import math
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .errors import InvalidParams, PoleProximity
from .model import ModelParams, derive_frame, frame_scalars
from .scalars import scalar_sqrt

#: default cap on stored series length; longer evaluations stream windowed
MAX_STORED_TERMS = 10**6


@dataclass(frozen=True)
class CoefficientSeries:
    """A stored run of one of the recurrences.

    kind is "raw" (first=e, second=f), "rescaled" (first=Lam, second=xi) or
    "collapse" (no first component; second=f^c).
    """

    kind: str
    first: np.ndarray | None
    second: np.ndarray
    energy: float | None
    truncation: int
    n_star: int | None


@dataclass(frozen=True)
class AsymptoticCoefficients:
    """Large-n limits of the rescaled recurrence coefficients."""

    a: float
    b: float
    c: float
    d: float
    d_tilde: float
    h: float
    h_tilde: float


def pole_guard_width(energy: float) -> float:
    """Absolute half-width of the guard strip around each pole."""
    return 1e-10 * max(1.0, abs(energy))


def nearest_pole(p: ModelParams, energy: float) -> tuple[int, float]:
    """Index and distance of the ladder pole nearest to energy."""
    f = derive_frame(p)
    spacing = 2.0 * f.beta_plus * f.beta_minus
    k = int(round((energy + 0.5) / spacing - p.q))
    best_n, best_d = 0, math.inf
    for n in (k - 1, k, k + 1):
        if n < 0:
            continue
        d = abs(energy - (spacing * (n + p.q) - 0.5))
        if d < best_d:
            best_n, best_d = n, d
    return best_n, best_d


def check_pole_guard(p: ModelParams, energy: float) -> None:
    n, d = nearest_pole(p, energy)
    if d < pole_guard_width(energy):
        raise PoleProximity(energy, n, d)


def _require_series_domain(r, g) -> None:
    # The recurrence divides by sqrt(r) and by g; both endpoints have their
    # own exact treatments elsewhere (RWA closed form at r=0, decoupled
    # spectrum at g=0).
    if not (r > 0.0):
        raise InvalidParams(f"series recurrence needs r > 0, got {r!r}")
    if not (g > 0.0):
        raise InvalidParams(f"series recurrence needs g > 0, got {g!r}")


def raw_pairs(delta, r, q, g, energy, n_terms, sqrt=scalar_sqrt):
    """Raw sequences e_0..e_N, f_0..f_N over a generic scalar type.

    No pole guard here; callers that cannot tolerate a near-zero denominator
    go through raw_series.
    """
    _require_series_domain(float(r), float(g))
    bp, bm, _, _, _ = frame_scalars(r, g, sqrt=sqrt)
    sq = sqrt(r)
    two_bb = 2 * bp * bm
    cross = g * (1 - r) / (2 * sq)
    shift = 2 * g * g * (1 - r * r)
    es, fs = [], [1.0]
    for n in range(n_terms + 1):
        fn = fs[n]
        fm1 = fs[n - 1] if n >= 1 else 0.0
        em1 = es[n - 1] if n >= 1 else 0.0
        denom = two_bb * (n + q) - 0.5 - energy
        e_n = (
            cross * ((1 + r) * bm * fm1 - (1 - r) * bp * em1)
            + (0.5 * delta - shift * (n + q)) * fn
        ) / denom
        es.append(e_n)
        den = 8 * sq * g * (n + q + 0.25) * (n + q + 0.75)
        f_next = (
            (1 + r) * bm * ((1 - r) * bp * em1 - (1 + r) * bm * fm1)
            / (16 * r * (n + q + 0.25) * (n + q + 0.75))
            + (2 * (n + q) * bm * (2 - bp * bp) - (0.5 + energy) * bp) * fn / den
            + (-0.5 * delta - shift * (n + q)) * bp * e_n / den
        )
        fs.append(f_next)
    return es, fs[: n_terms + 1]


def rescaled_pairs(delta, r, q, g, energy, n_terms, sqrt=scalar_sqrt):
    """Rescaled sequences Lam_0..Lam_N, xi_0..xi_N (generic scalars)."""
    _require_series_domain(float(r), float(g))
    bp, bm, _, _, th = frame_scalars(r, g, sqrt=sqrt)
    sq = sqrt(r)
    two_bb = 2 * bp * bm
    cross = g * (1 - r) / (2 * sq)
    shift = 2 * g * g * (1 - r * r)
    lams, xis = [], [1.0]
    lam_prev = 0.0
    xi_prev = 0.0
    for n in range(n_terms + 1):
        xi_n = xis[n]
        denom = two_bb * (n + q) - 0.5 - energy
        lam_n = (0.5 * delta - shift * (n + q)) * xi_n / denom
        if n >= 1:
            lam_n = lam_n + (
                cross * ((1 + r) * bm * xi_prev - (1 - r) * bp * lam_prev)
                / denom
                * (2 * (n + q - 0.25) * (n + q - 0.75) / n)
                * th
            )
        lams.append(lam_n)
        step = th / (4 * sq * g * (n + 1))
        xi_next = (
            (-0.5 * delta - shift * (n + q)) * bp * lam_n * step
            + (2 * (n + q) * bm * (2 - bp * bp) - (0.5 + energy) * bp) * xi_n * step
        )
        if n >= 1:
            xi_next = xi_next + (
                (1 + r)
                * ((1 - r) * bp * bm * lam_prev - (1 + r) * bm * bm * xi_prev)
                * (n + q - 0.25)
                * (n + q - 0.75)
                * th
                * th
                / (4 * r * n * (n + 1))
            )
        xis.append(xi_next)
        lam_prev, xi_prev = lam_n, xi_n
    return lams, xis[: n_terms + 1]


def _to_series(kind, first, second, energy, n_star) -> CoefficientSeries:
    return CoefficientSeries(
        kind=kind,
        first=None if first is None else np.asarray(first, dtype=float),
        second=np.asarray(second, dtype=float),
        energy=energy,
        truncation=len(second) - 1,
        n_star=n_star,
    )


def _check_store(n_terms: int, max_store: int) -> None:
    if n_terms < 0:
        raise InvalidParams(f"n_terms must be >= 0, got {n_terms!r}")
    if n_terms > max_store:
        raise InvalidParams(
            f"stored series capped at {max_store} terms (asked {n_terms}); "
            "use the streaming G-evaluators for longer runs"
        )


def raw_series(
    p: ModelParams, energy: float, n_terms: int, max_store: int = MAX_STORED_TERMS
) -> CoefficientSeries:
    """Stored raw series at one energy, guarded against the pole ladder."""
    _check_store(n_terms, max_store)
    derive_frame(p)  # validates g < g_c
    check_pole_guard(p, energy)
    es, fs = raw_pairs(p.delta, p.r, p.q, p.g, energy, n_terms, sqrt=math.sqrt)
    return _to_series("raw", es, fs, energy, estimate_min_truncation(p, energy))


def rescaled_series(
    p: ModelParams, energy: float, n_terms: int, max_store: int = MAX_STORED_TERMS
) -> CoefficientSeries:
    """Stored rescaled series at one energy, guarded against the pole ladder."""
    _check_store(n_terms, max_store)
    derive_frame(p)
    check_pole_guard(p, energy)
    lams, xis = rescaled_pairs(p.delta, p.r, p.q, p.g, energy, n_terms, sqrt=math.sqrt)
    return _to_series("rescaled", lams, xis, energy, estimate_min_truncation(p, energy))


def pole_branch_pairs(delta: float, r: float, q: float, g: float, n_pole: int):
    """Raw sequences restarted exactly on pole n_pole.

    With E pinned to the pole, the e-denominator at index i becomes
    2(i - n_pole) beta+ beta-, nonzero for every i < n_pole, so f_0..f_n_pole
    and e_0..e_{n_pole-1} are well defined; e_{n_pole} is never formed.
    """
    _require_series_domain(r, g)
    if n_pole < 0:
        raise InvalidParams(f"pole index must be >= 0, got {n_pole!r}")
    bp, bm, _, _, _ = frame_scalars(r, g, sqrt=math.sqrt)
    sq = math.sqrt(r)
    two_bb = 2.0 * bp * bm
    cross = g * (1.0 - r) / (2.0 * sq)
    shift = 2.0 * g * g * (1.0 - r * r)
    energy = two_bb * (n_pole + q) - 0.5
    es, fs = [], [1.0]
    for n in range(n_pole):
        fn = fs[n]
        fm1 = fs[n - 1] if n >= 1 else 0.0
        em1 = es[n - 1] if n >= 1 else 0.0
        denom = two_bb * (n - n_pole)
        e_n = (
            cross * ((1.0 + r) * bm * fm1 - (1.0 - r) * bp * em1)
            + (0.5 * delta - shift * (n + q)) * fn
        ) / denom
        es.append(e_n)
        den = 8.0 * sq * g * (n + q + 0.25) * (n + q + 0.75)
        f_next = (
            (1.0 + r) * bm * ((1.0 - r) * bp * em1 - (1.0 + r) * bm * fm1)
            / (16.0 * r * (n + q + 0.25) * (n + q + 0.75))
            + (2.0 * (n + q) * bm * (2.0 - bp * bp) - (0.5 + energy) * bp) * fn / den
            + (-0.5 * delta - shift * (n + q)) * bp * e_n / den
        )
        fs.append(f_next)
    return es, fs


def collapse_series(n_terms: int, q: float = 0.25) -> CoefficientSeries:
    """f-sequence of the continued recurrence exactly at g = g_c.

    At the collapse point the f-recurrence closes on itself,
    f_{n+1} = [(n+q) f_n - f_{n-1}/4] / [(n+q+1/4)(n+q+3/4)],
    and its solution 1/(2^n n!) is independent of E, q, r and delta.
    """
    if n_terms < 0:
        raise InvalidParams(f"n_terms must be >= 0, got {n_terms!r}")
    # exact rational arithmetic: the coefficients are rationals and the
    # closed-form comparison is advertised at near machine precision
    qf = Fraction(q)
    fs = [Fraction(1)]
    quarter = Fraction(1, 4)
    for n in range(n_terms):
        fm1 = fs[n - 1] if n >= 1 else Fraction(0)
        f_next = ((n + qf) * fs[n] - quarter * fm1) / (
            (n + qf + quarter) * (n + qf + 3 * quarter)
        )
        fs.append(f_next)
    return _to_series("collapse", None, [float(v) for v in fs[: n_terms + 1]], None, None)


def collapse_closed_form(n: int) -> float:
    """1 / (2^n n!), the collapse-point coefficient."""
    if n <= 150:
        # 2^150 * 150! stays below float overflow; integer route is exact
        return 1.0 / float((1 << n) * math.factorial(n))
    return math.exp(-n * math.log(2.0) - math.lgamma(n + 1.0))


def estimate_min_truncation(p: ModelParams, energy: float) -> int:
    """Smallest reliable series truncation N* = ceil(|E+1/2| / (2 b+ b-)).

    Partial sums shorter than this sit in the pre-asymptotic window where the
    recurrence has not yet passed the pole region belonging to the energy.
    """
    f = derive_frame(p)
    return int(math.ceil(abs(energy + 0.5) / (2.0 * f.beta_plus * f.beta_minus)))


def asymptotic_coefficients(p: ModelParams) -> AsymptoticCoefficients:
    """n -> infinity limits of the rescaled recurrence coefficients."""
    _require_series_domain(p.r, p.g)
    f = derive_frame(p)
    bp, bm, th = f.beta_plus, f.beta_minus, f.tanh_theta
    g, r = p.g, p.r
    sq = math.sqrt(r)
    return AsymptoticCoefficients(
        a=-g * g * (1.0 - r * r) / (bp * bm),
        b=g * (1.0 - r * r) * th / (2.0 * sq * bp),
        c=-g * (1.0 - r) ** 2 * th / (2.0 * sq * bm),
        d=bm * (2.0 - bp * bp) * th / (2.0 * sq * g),
        d_tilde=-g * (1.0 - r * r) * bp * th / (2.0 * sq),
        h=-((1.0 + r) ** 2) * bm * bm * th * th / (4.0 * r),
        h_tilde=(1.0 - r * r) * bp * bm * th * th / (4.0 * r),
    )


def rescaled_coefficients_at(p: ModelParams, energy: float, n: int) -> dict[str, float]:
    """The finite-n recurrence coefficients, for diagnostics and tests."""
    _require_series_domain(p.r, p.g)
    f = derive_frame(p)
    bp, bm, th = f.beta_plus, f.beta_minus, f.tanh_theta
    g, r, q = p.g, p.r, p.q
    sq = math.sqrt(r)
    denom = 2.0 * (n + q) * bp * bm - 0.5 - energy
    cross = g * (1.0 - r) / (2.0 * sq)
    shift = 2.0 * g * g * (1.0 - r * r)
    ratio = 2.0 * (n + q - 0.25) * (n + q - 0.75) / n if n >= 1 else 0.0
    step = th / (4.0 * sq * g * (n + 1))
    pair = (
        (n + q - 0.25) * (n + q - 0.75) * th * th / (4.0 * r * n * (n + 1))
        if n >= 1
        else 0.0
    )
    return {
        "a": (0.5 * p.delta - shift * (n + q)) / denom,
        "b": cross * (1.0 + r) * bm * ratio * th / denom,
        "c": -cross * (1.0 - r) * bp * ratio * th / denom,
        "d": (2.0 * (n + q) * bm * (2.0 - bp * bp) - (0.5 + energy) * bp) * step,
        "d_tilde": (-0.5 * p.delta - shift * (n + q)) * bp * step,
        "h": -((1.0 + r) ** 2) * bm * bm * pair,
        "h_tilde": (1.0 - r * r) * bp * bm * pair,
    }


def log_prefactor(n: int, q: float) -> float:
    """log of [2(n+q-1/4)]! / (2^n n!), the raw-to-rescaled prefactor."""
    return (
        math.lgamma(2.0 * (n + q - 0.25) + 1.0)
        - n * math.log(2.0)
        - math.lgamma(n + 1.0)
    )


def series_log_csv(series: CoefficientSeries, path) -> None:
    """Dump (n, log10|first_n|, log10|second_n|) for decay diagnostics."""

    def _l10(v: float) -> float:
        av = abs(v)
        return math.log10(av) if av > 0.0 else -math.inf

    with open(path, "w", newline="", encoding="utf-8") as fh:
        w = csv.writer(fh, lineterminator="\n")
        w.writerow(["n", "log10_first", "log10_second"])
        for n in range(series.truncation + 1):
            first = _l10(series.first[n]) if series.first is not None else ""
            w.writerow([n, first, _l10(series.second[n])])
