"""Model parameters and the squeezed-frame quantities derived from them.

The Hamiltonian is the two-photon Rabi model with independent rotating and
counter-rotating couplings g and r*g (photon frequency set to 1):

    H = (delta/2) sigma_z + a^dag a
        + g  [(a^dag)^2 sigma_- + sigma_+ a^2]
        + rg [(a^dag)^2 sigma_+ + sigma_- a^2]

Everything downstream (series coefficients, G-functions, pole ladder) lives in
a Bogoliubov-squeezed frame characterised by the two frequencies

    beta_pm = sqrt(1 - g^2 (r +/- 1)^2),

which are real exactly for g below the collapse coupling g_c = 1/(1+r).
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

from .errors import CouplingAtOrAboveCritical, InvalidParams
from .scalars import scalar_sqrt

VALID_Q = (0.25, 0.75)


@dataclass(frozen=True)
class ModelParams:
    """Validated model parameters.

    q selects the photon-number subspace (0.25 even, 0.75 odd); parity is the
    +/-1 grading that survives inside that subspace.
    """

    delta: float
    r: float
    g: float
    q: float = 0.25
    parity: int = +1

    def __post_init__(self):
        if not (self.delta >= 0.0):
            raise InvalidParams(f"delta must be >= 0, got {self.delta!r}")
        if not (self.r >= 0.0):
            raise InvalidParams(f"r must be >= 0, got {self.r!r}")
        if not (self.g >= 0.0):
            raise InvalidParams(f"g must be >= 0, got {self.g!r}")
        if self.q not in VALID_Q:
            raise InvalidParams(f"q must be one of {VALID_Q}, got {self.q!r}")
        if self.parity not in (+1, -1):
            raise InvalidParams(f"parity must be +1 or -1, got {self.parity!r}")

    @property
    def g_crit(self) -> float:
        return collapse_coupling(self.r)

    def with_(self, **kw) -> "ModelParams":
        return replace(self, **kw)


@dataclass(frozen=True)
class BogoliubovFrame:
    """Squeezed-frame quantities for one (r, g) point with g < g_c."""

    beta_plus: float
    beta_minus: float
    cosh_theta: float
    sinh_theta: float
    tanh_theta: float
    r1: float
    r2: float
    g_crit: float


@dataclass(frozen=True)
class CrossingPoint:
    """First-pole crossing of the two parity levels.

    ``inside`` is False when the splitting exceeds its critical value and the
    closed form leaves the physical coupling range (the energy is then NaN).
    """

    g: float
    energy: float
    inside: bool


def collapse_coupling(r: float) -> float:
    """Critical coupling g_c = 1/(1+r) where the squeezed frame degenerates."""
    if not (r >= 0.0):
        raise InvalidParams(f"r must be >= 0, got {r!r}")
    return 1.0 / (1.0 + r)


def critical_splitting(q: float, r: float) -> float:
    """Threshold splitting 4q(1-r)/(1+r) separating the collapse regimes."""
    if q not in VALID_Q:
        raise InvalidParams(f"q must be one of {VALID_Q}, got {q!r}")
    if not (r >= 0.0):
        raise InvalidParams(f"r must be >= 0, got {r!r}")
    return 4.0 * q * (1.0 - r) / (1.0 + r)


def frame_scalars(r, g, sqrt=scalar_sqrt):
    """Frame quantities over a generic scalar type.

    Returns (beta_plus, beta_minus, cosh_theta, sinh_theta, tanh_theta).
    No domain checks; callers wanting validation use derive_frame.
    """
    beta_plus = sqrt(1 - g * g * (r + 1) * (r + 1))
    beta_minus = sqrt(1 - g * g * (r - 1) * (r - 1))
    # cosh^2 = (b+ + b-)/(2 b+); sinh^2 = (b- - b+)/(2 b+); both nonnegative
    # because b- >= b+ always.
    cosh2 = (beta_plus + beta_minus) / (2 * beta_plus)
    sinh2 = (beta_minus - beta_plus) / (2 * beta_plus)
    cosh_theta = sqrt(cosh2)
    sinh_theta = sqrt(sinh2)
    tanh_theta = sinh_theta / cosh_theta
    return beta_plus, beta_minus, cosh_theta, sinh_theta, tanh_theta


def derive_frame(p: ModelParams) -> BogoliubovFrame:
    """Squeezed-frame data for p; requires g strictly below g_c."""
    g_crit = collapse_coupling(p.r)
    if p.g >= g_crit:
        raise CouplingAtOrAboveCritical(p.g, g_crit)
    bp, bm, ch, sh, th = frame_scalars(p.r, p.g, sqrt=math.sqrt)
    r1 = p.r * sh * sh + ch * ch
    r2 = p.r * ch * ch + sh * sh
    return BogoliubovFrame(
        beta_plus=bp,
        beta_minus=bm,
        cosh_theta=ch,
        sinh_theta=sh,
        tanh_theta=th,
        r1=r1,
        r2=r2,
        g_crit=g_crit,
    )


def frame_from_distance(r: float, eps: float) -> BogoliubovFrame:
    """Frame built from the relative distance eps = 1 - g/g_c.

    Near the collapse point the direct form 1 - g^2(1+r)^2 cancels
    catastrophically; here g(1+r) = 1 - eps exactly, so
    beta_plus = sqrt(eps(2-eps)) keeps full relative accuracy down to
    eps ~ 1e-300.
    """
    if not (0.0 < eps <= 1.0):
        raise InvalidParams(f"eps must be in (0, 1], got {eps!r}")
    g_crit = collapse_coupling(r)
    g = g_crit * (1.0 - eps)
    bp = math.sqrt(eps * (2.0 - eps))
    s = (1.0 - eps) * (1.0 - r) / (1.0 + r)
    bm = math.sqrt(1.0 - s * s)
    cosh2 = (bp + bm) / (2.0 * bp)
    sinh2 = (bm - bp) / (2.0 * bp)
    ch = math.sqrt(cosh2)
    sh = math.sqrt(sinh2)
    return BogoliubovFrame(
        beta_plus=bp,
        beta_minus=bm,
        cosh_theta=ch,
        sinh_theta=sh,
        tanh_theta=sh / ch,
        r1=r * sinh2 + cosh2,
        r2=r * cosh2 + sinh2,
        g_crit=g_crit,
    )


def pole_energy(n: int, p: ModelParams) -> float:
    """Ladder pole E_n = 2(n+q) beta_plus beta_minus - 1/2."""
    if n < 0:
        raise InvalidParams(f"pole index must be >= 0, got {n!r}")
    f = derive_frame(p)
    return 2.0 * (n + p.q) * f.beta_plus * f.beta_minus - 0.5


def crossing_point(q: float, delta: float, r: float) -> CrossingPoint:
    """Where the two parity levels first meet the n=0 pole line.

    The coupling is g0 = (1/2) sqrt(delta / (q (1 - r^2))) and the energy is
    the n=0 pole evaluated there.  For delta above the critical splitting the
    point leaves g < g_c and the energy turns complex; that case is reported
    with inside=False and energy=NaN rather than as a failure.
    """
    if q not in VALID_Q:
        raise InvalidParams(f"q must be one of {VALID_Q}, got {q!r}")
    if not (0.0 <= r < 1.0):
        raise InvalidParams(f"crossing point needs 0 <= r < 1, got {r!r}")
    if not (delta > 0.0):
        raise InvalidParams(f"delta must be > 0, got {delta!r}")
    g0 = 0.5 * math.sqrt(delta / (q * (1.0 - r * r)))
    u = delta / (4.0 * q)
    f1 = 1.0 - u * (1.0 - r) / (1.0 + r)
    f2 = 1.0 - u * (1.0 + r) / (1.0 - r)
    delta_c = critical_splitting(q, r)
    if delta <= delta_c:
        energy = 2.0 * q * math.sqrt(f1 * f2) - 0.5
        return CrossingPoint(g=g0, energy=energy, inside=True)
    return CrossingPoint(g=g0, energy=math.nan, inside=False)
