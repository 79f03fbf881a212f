"""Radial and simplified radial errors of family members and their extrema."""

from __future__ import annotations

import enum
import math
from dataclasses import dataclass

import numpy as np

from .exceptions import DegenerateQuadratic, NoInteriorExtremum, NotAlternating, NumericalError
from .families import QuadraticQ, check_degree, control_points, q_coeffs
from .geometry import ArcSpec, eval_curve, sample_curve

DEGENERATE_ALPHA = 1e-14


class ErrorKind(str, enum.Enum):
    RADIAL = "radial"
    SIMPLIFIED = "simplified"


@dataclass(frozen=True)
class ErrorProfile:
    """Interior extrema of a symmetric error: ``t0 = 0`` and ``+-t1``."""

    t0: float
    t1: float
    v0: float
    v1: float
    max_abs: float
    alternations: int

    def points(self):
        """``(t, value)`` pairs ordered by ``t``."""
        return [(-self.t1, self.v1), (self.t0, self.v0), (self.t1, self.v1)]


def radial_from_simplified(psi_value):
    """Map ``|p|**2 - 1`` to ``|p| - 1`` without cancellation."""
    psi_value = np.asarray(psi_value, dtype=float)
    if np.any(psi_value < -1.0):
        raise NumericalError("simplified error below -1: curve passes through the origin")
    out = psi_value / (1.0 + np.sqrt(1.0 + psi_value))
    return float(out) if out.ndim == 0 else out


def psi(degree: int, arc: ArcSpec, d: float, t):
    """Simplified radial error ``|p(t)|**2 - 1`` by direct curve evaluation."""
    curve = control_points(degree, arc, d)
    # Family polygons are mirror images of themselves, so the error is even;
    # evaluating at |t| makes that exact in floating point too.
    if np.ndim(t) == 0:
        x, y = eval_curve(curve, abs(float(t)))
        return x * x + y * y - 1.0
    pts = sample_curve(curve, np.abs(t))
    return np.einsum("ij,ij->i", pts, pts) - 1.0


def phi(degree: int, arc: ArcSpec, d: float, t):
    """Radial error ``|p(t)| - 1``."""
    return radial_from_simplified(psi(degree, arc, d, t))


def error_values(psi_values, kind: ErrorKind):
    if ErrorKind(kind) is ErrorKind.RADIAL:
        return radial_from_simplified(psi_values)
    return psi_values


def interior_extremum_sq(degree: int, q: QuadraticQ) -> float:
    """Square of the positive interior critical point of ``(t^2-1)^(n-1) q(t)``."""
    if abs(q.alpha) < DEGENERATE_ALPHA:
        raise DegenerateQuadratic(f"leading coefficient {q.alpha!r} is numerically zero")
    return (q.alpha - (degree - 1) * q.beta) / (degree * q.alpha)


def profile_from_q(degree: int, q: QuadraticQ, kind: ErrorKind = ErrorKind.RADIAL) -> ErrorProfile:
    ratio = interior_extremum_sq(degree, q)
    if not 0.0 < ratio < 1.0:
        raise NoInteriorExtremum(f"t1^2 = {ratio!r} is outside (0, 1)")
    t1 = math.sqrt(ratio)
    v0 = float(error_values(q.psi(degree, 0.0), kind))
    v1 = float(error_values(q.psi(degree, t1), kind))
    alternations = 3 if v0 * v1 < 0 else 1
    return ErrorProfile(0.0, t1, v0, v1, max(abs(v0), abs(v1)), alternations)


def extrema(degree: int, arc: ArcSpec, d: float, kind: ErrorKind = ErrorKind.RADIAL) -> ErrorProfile:
    degree = check_degree(degree)
    return profile_from_q(degree, q_coeffs(degree, arc, d), kind)


def equioscillation_residual(profile: ErrorProfile) -> float:
    """Signed imbalance ``v0 + v1`` between the central and outer extrema."""
    if profile.v0 * profile.v1 >= 0:
        raise NotAlternating(f"extremal values {profile.v0!r}, {profile.v1!r} do not alternate")
    return profile.v0 + profile.v1
