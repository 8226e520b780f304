"""Exception types shared across the package.

Flags that are expected outcomes (non-convergence of a tail, a crossing point
that leaves the physical coupling range, the double-precision floor of a
near-critical probe) are carried on result objects instead of raised; only
genuine contract violations raise.
"""

from __future__ import annotations


class AtpqrmError(Exception):
    """Base class for all package-specific errors."""


class InvalidParams(AtpqrmError):
    """Model parameters outside the validated domain."""


class CouplingAtOrAboveCritical(InvalidParams):
    """Operation requires g < g_c = 1/(1+r) but received g >= g_c."""

    def __init__(self, g: float, g_crit: float):
        self.g = g
        self.g_crit = g_crit
        super().__init__(f"coupling g={g!r} is at or above g_c={g_crit!r}")


class PoleProximity(AtpqrmError):
    """Probe energy sits within the pole guard of a ladder pole."""

    def __init__(self, energy: float, pole_index: int, distance: float):
        self.energy = energy
        self.pole_index = pole_index
        self.distance = distance
        super().__init__(
            f"energy {energy!r} lies within the pole guard of pole "
            f"n={pole_index} (distance {distance:.3e})"
        )


class NoCrossing(AtpqrmError):
    """No degenerate point exists in the scanned coupling range."""


class InsufficientPoints(AtpqrmError):
    """Not enough data points for the requested fit (need at least 3)."""


class DomainTooSmall(AtpqrmError):
    """Boundary guard tripped for a requested bound state at the largest box."""


class AmbiguousParity(AtpqrmError):
    """State has no clean subspace-parity expectation value."""

    def __init__(self, expectation: float):
        self.expectation = expectation
        super().__init__(f"parity expectation {expectation!r} is not close to +/-1")


class NoConvergence(AtpqrmError):
    """Eigensolver failed to converge."""


class UnresolvedInterval(AtpqrmError):
    """Sign pattern in a pole interval kept changing under grid refinement.

    The level scanner records these in LevelSet diagnostics instead of
    raising, so one misbehaving interval does not void a whole scan.
    """

    def __init__(self, interval: int, detail: str = ""):
        self.interval = interval
        self.detail = detail
        super().__init__(f"interval {interval}: sign pattern did not stabilize {detail}")
