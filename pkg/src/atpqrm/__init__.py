"""Spectra of the anisotropic two-photon quantum Rabi model.

Numerically exact discrete levels from a G-function built on a rescaled
three-term recurrence, degeneracy (exceptional) points on the pole lines,
near-critical restarted-series scans, an independent banded-matrix
diagonalization cross-check, and the bound-state problem exactly at the
spectral collapse coupling.
"""

__version__ = "0.1.0"

from .errors import (
    AmbiguousParity,
    AtpqrmError,
    CouplingAtOrAboveCritical,
    DomainTooSmall,
    InsufficientPoints,
    InvalidParams,
    NoConvergence,
    NoCrossing,
    PoleProximity,
    UnresolvedInterval,
)
from .model import (
    BogoliubovFrame,
    CrossingPoint,
    ModelParams,
    collapse_coupling,
    critical_splitting,
    crossing_point,
    derive_frame,
    frame_from_distance,
    pole_energy,
)
from .recurrence import (
    CoefficientSeries,
    collapse_series,
    estimate_min_truncation,
    nearest_pole,
    raw_series,
    rescaled_series,
)
from .gfunction import (
    GEvaluation,
    degeneracy_function,
    degeneracy_function_at_collapse,
    exceptional_g_function,
    exceptional_scan,
    g_function,
    g_function_pair,
)
from .spectrum import (
    DegeneratePoint,
    EnergyLevel,
    ExceptionalZeros,
    LevelSet,
    count_bound_states_via_exceptional,
    find_degenerate_points,
    find_levels,
    fit_exponential_spacing,
    last_crossing,
    scale_spectrum,
)
from .fock import EDResult, critical_min_eigenvalue, diagonalize, ed_levels, rwa_spectrum
from .collapse import (
    BoundStateSet,
    CollapseProblem,
    brownstein_integral,
    faddeev_integral,
    solve_bound_states,
    stretched_potential,
    tail_coefficients,
)
