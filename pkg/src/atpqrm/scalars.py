"""Scalar abstraction hook.

All closed-form frame quantities and the reference recurrence are written
against plain arithmetic plus :func:`scalar_sqrt`, so they accept any numeric
type with field operations (float, Fraction-backed floats, mpmath.mpf, ...).
The performance path (`_kernels`) is float64-only; plugging an
extended-precision scalar into the reference path is the supported way to push
past the double-precision floor.
"""

from __future__ import annotations

import math


def scalar_sqrt(x):
    """Square root following the scalar type of the argument."""
    if type(x) is float or type(x) is int:
        return math.sqrt(x)
    sqrt_method = getattr(x, "sqrt", None)
    if callable(sqrt_method):
        return sqrt_method()
    return x ** 0.5
