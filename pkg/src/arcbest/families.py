"""One-parameter families of symmetric G^(n-2) interpolants, n = 2..5.

For every family the simplified radial error factors as
``(t**2 - 1)**(n - 1) * q(t)`` with ``q`` an even quadratic in ``t`` whose
coefficients depend on the free parameter ``d``.
"""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field

import numpy as np
from numpy.polynomial import Polynomial
from numpy.polynomial import polynomial as P

from .exceptions import DomainError, NumericalError
from .geometry import ArcSpec, BezierCurve2, Point2

DEGREES = (2, 3, 4, 5)
SQRT3 = math.sqrt(3.0)
# Below this cosine the quartic interval uses its c -> 0 limit.
C_ZERO = 1e-12
DIVISION_RTOL = 1e-10

# Power-basis polynomials play the role of the plain ascending-coefficient
# polynomial type used for the q extraction.
Poly1 = Polynomial


@dataclass(frozen=True)
class QuadraticQ:
    """Even quadratic ``alpha * t**2 + beta``."""

    alpha: float
    beta: float

    def __call__(self, t):
        return self.alpha * np.square(t) + self.beta

    def psi(self, degree: int, t):
        """Rebuild ``(t**2 - 1)**(degree - 1) * q(t)``."""
        return (np.square(t) - 1.0) ** (degree - 1) * self(t)


@dataclass(frozen=True)
class FamilyIntervals:
    """Admissible parameter interval ``(i_lo, i_hi)`` plus auxiliary bounds.

    For the unbounded families (n = 2, 3) ``i_hi`` is ``inf`` and
    ``search_cap`` gives the finite upper end used to start root searches.
    """

    degree: int
    i_lo: float
    i_hi: float
    constants: dict = field(default_factory=dict)
    i_hi_unbounded: bool = False
    search_cap: float = math.nan

    @property
    def upper(self) -> float:
        return self.search_cap if self.i_hi_unbounded else self.i_hi

    def __contains__(self, d: float) -> bool:
        return self.i_lo < d < self.i_hi


def check_degree(degree) -> int:
    if isinstance(degree, bool) or int(degree) != degree or degree not in DEGREES:
        raise DomainError(f"degree must be one of {DEGREES}, got {degree!r}")
    return int(degree)


def _check_parameter(degree: int, arc: ArcSpec, d: float) -> float:
    d = float(d)
    if not math.isfinite(d):
        raise DomainError(f"parameter d must be finite, got {d!r}")
    if degree == 3 and d < 0:
        raise DomainError("cubic requires d >= 0")
    if degree == 4 and 1.0 - arc.c * d < 0:
        raise DomainError("quartic requires d < 1/c")
    if degree == 5 and 5.0 * d + 2.0 * arc.s * arc.c == 0:
        raise DomainError("quintic requires 5d + 2sc != 0")
    return d


def _lower_half(degree: int, c: float, s: float, d):
    """Control points ``b_0 .. b_(n//2)`` as (x, y) pairs; ``d`` may be an array."""
    if degree == 2:
        return [(c, -s), (d, 0.0 * d)]
    if degree == 3:
        return [(c, -s), (c + d * s, -s + d * c)]
    if degree == 4:
        h = SQRT3 / 2.0 * np.sqrt(1.0 - c * d)
        return [(c, -s), (c + h * s, -s + h * c), (d, 0.0 * d)]
    den = 4.0 * (5.0 * d + 2.0 * s * c)
    mx = (5.0 * d * (4.0 - 5.0 * d * d) * c + 4.0 * (2.0 + 5.0 * d * d) * s) / den
    my = -5.0 * d * ((4.0 - 5.0 * d * d) * s - 6.0 * d * c) / den
    return [(c, -s), (c + d * s, -s + d * c), (mx, my)]


def _mirrored(degree: int, lower):
    upper = [(x, -y) for x, y in reversed(lower[: degree + 1 - len(lower)])]
    return lower + upper


def control_points(degree: int, arc: ArcSpec, d: float) -> BezierCurve2:
    """Control points of the family member with parameter ``d``.

    Only the lower half is computed; the upper half is its exact mirror image.
    """
    degree = check_degree(degree)
    d = _check_parameter(degree, arc, d)
    pts = _mirrored(degree, _lower_half(degree, arc.c, arc.s, d))
    return BezierCurve2(tuple(Point2(float(x), float(y)) for x, y in pts))


def control_points_array(degree: int, arc: ArcSpec, ds) -> np.ndarray:
    """Control polygons for many parameters at once, shape ``(len(ds), n + 1, 2)``."""
    degree = check_degree(degree)
    ds = np.asarray(ds, dtype=float)
    for d in (ds.min(), ds.max()):
        _check_parameter(degree, arc, d)
    pts = _mirrored(degree, _lower_half(degree, arc.c, arc.s, ds))
    out = np.empty((len(ds), degree + 1, 2))
    for j, (x, y) in enumerate(pts):
        out[:, j, 0] = x
        out[:, j, 1] = y
    return out


@functools.lru_cache(maxsize=None)
def _bernstein_to_power(n: int) -> np.ndarray:
    """Column ``j`` holds the ascending power coefficients of ``B_j^n``."""
    up = Poly1([0.5, 0.5])
    down = Poly1([0.5, -0.5])
    out = np.zeros((n + 1, n + 1))
    for j in range(n + 1):
        out[:, j] = (math.comb(n, j) * up**j * down ** (n - j)).coef
    out.flags.writeable = False
    return out


@functools.lru_cache(maxsize=None)
def _circle_factor(n: int) -> np.ndarray:
    return (Poly1([-1.0, 0.0, 1.0]) ** (n - 1)).coef


def power_form(curve: BezierCurve2) -> tuple[Poly1, Poly1]:
    """Coordinates of ``curve`` as power-basis polynomials in ``t``."""
    basis = _bernstein_to_power(curve.degree)
    pts = curve.as_array()
    return Poly1(basis @ pts[:, 0]), Poly1(basis @ pts[:, 1])


def divide_simplified_error(curve: BezierCurve2) -> tuple[QuadraticQ, float]:
    """Divide ``|p(t)|**2 - 1`` by ``(t**2 - 1)**(n - 1)``.

    Returns the even quadratic quotient and the size of everything that
    should vanish (remainder, odd and higher quotient terms) relative to the
    largest coefficient of ``x**2 + y**2``, the scale at which the
    cancellation happens.
    """
    n = curve.degree
    x, y = power_form(curve)
    norm2 = np.convolve(x.coef, x.coef) + np.convolve(y.coef, y.coef)
    psi = norm2.copy()
    psi[0] -= 1.0
    quot, rem = P.polydiv(psi, _circle_factor(n))
    coef = np.zeros(3)
    coef[: min(3, len(quot))] = quot[:3]
    residue = max(np.abs(rem).max(), abs(coef[1]), np.abs(quot[3:]).max(initial=0.0))
    scale = max(np.abs(norm2).max(), 1.0)
    return QuadraticQ(float(coef[2]), float(coef[0])), float(residue / scale)


def extract_q(curve: BezierCurve2, rtol: float = DIVISION_RTOL) -> QuadraticQ:
    q, residue = divide_simplified_error(curve)
    if residue > rtol:
        raise NumericalError(
            f"(t^2-1)^{curve.degree - 1} does not divide the simplified error: "
            f"relative remainder {residue:.3e}"
        )
    return q


def q_coeffs(degree: int, arc: ArcSpec, d: float) -> QuadraticQ:
    """Coefficients of ``q_n(., d)``; closed forms for n <= 4, extraction for n = 5."""
    degree = check_degree(degree)
    d = _check_parameter(degree, arc, d)
    c, s = arc.c, arc.s
    if degree == 2:
        return QuadraticQ((d - c) ** 2 / 4.0, (4.0 - (d + c) ** 2) / 4.0)
    if degree == 3:
        return QuadraticQ(
            (3.0 * d * c - 2.0 * s) ** 2 / 16.0,
            ((3.0 * d * s + 4.0 * c) ** 2 - 16.0) / 16.0,
        )
    if degree == 4:
        return _q4(c, s, d, math.sqrt(1.0 - c * d))
    return extract_q(control_points(5, arc, d))


def _q4(c, s, d, x):
    # x stands for sqrt(1 - c d); kept free so the same expression gives r_4.
    alpha = (
        12.0 - 3.0 * c * c - 30.0 * c * d + 12.0 * c**3 * d + 9.0 * d * d
        + 12.0 * SQRT3 * c * s * x - 12.0 * SQRT3 * s * d * x
    ) / 64.0
    beta = (
        52.0 - 13.0 * c * c - 12.0 * c**3 * d - 9.0 * d * d
        - 12.0 * SQRT3 * s * d * x - 2.0 * c * (9.0 * d + 10.0 * SQRT3 * s * x)
    ) / 64.0
    return QuadraticQ(alpha, beta)


def q_value(degree: int, arc: ArcSpec, t, d: float):
    return q_coeffs(degree, arc, d)(t)


def quintic_r(arc: ArcSpec, d: float) -> float:
    """Signed square root of the quintic leading coefficient."""
    c, s = arc.c, arc.s
    num = 125.0 * s * d**3 + 100.0 * c * d * d - 20.0 * s * (3.0 + c * c) * d + 16.0 * c * s * s
    return num / (32.0 * (5.0 * d + 2.0 * s * c))


def leading_coeff_q(degree: int, arc: ArcSpec, d: float, rtol: float = 1e-10) -> float:
    q = q_coeffs(degree, arc, d)
    if degree == 5:
        expected = quintic_r(arc, d) ** 2
        # Absolute floor: alpha vanishes at the roots of r.
        if abs(q.alpha - expected) > rtol * max(abs(expected), abs(q.alpha)) + 1e-13:
            raise NumericalError(
                f"quintic leading coefficient {q.alpha!r} disagrees with r(d)^2 = {expected!r}"
            )
    return q.alpha


def r4_poly(arc: ArcSpec, t: float) -> Poly1:
    """``q_4(t, (1 - x**2)/c)`` as a quartic polynomial in ``x`` (needs c > 0)."""
    c, s = arc.c, arc.s
    if c < C_ZERO:
        raise DomainError("r_4 substitution requires c > 0")
    x = Poly1([0.0, 1.0])
    d = (1.0 - x * x) / c
    q = _q4(c, s, d, x)
    return q.alpha * t * t + q.beta


def quartic_constants(arc: ArcSpec) -> tuple[float, float]:
    c, s = arc.c, arc.s
    a4 = SQRT3 / 3.0 * s * (c * c + SQRT3 * (1.0 - c))
    b4 = SQRT3 / 3.0 * s * (math.sqrt(3.0 + c * c) - c)
    return a4, b4


def quintic_constants(arc: ArcSpec) -> dict:
    c, s = arc.c, arc.s
    return {
        "alpha5": 2.0 * s / 5.0,
        "a5": 16.0 * s / (25.0 + 15.0 * c),
        "b5": 2.0 * s / (3.0 + 2.0 * c),
        "beta5": 4.0 * s / (5.0 * (1.0 + c)),
    }


def admissible_interval(degree: int, arc: ArcSpec) -> FamilyIntervals:
    degree = check_degree(degree)
    c = arc.c
    if degree == 2:
        cap = 4.0 - c if c < C_ZERO else min(4.0 - c, 1.0 / c)
        return FamilyIntervals(2, 1.0, math.inf, {}, True, cap)
    if degree == 3:
        return FamilyIntervals(3, 0.0, math.inf, {}, True, 2.0)
    if degree == 4:
        a4, b4 = quartic_constants(arc)
        consts = {"a4": a4, "b4": b4}
        if c < C_ZERO:
            return FamilyIntervals(4, 2.0 / SQRT3, 2.0, consts)
        return FamilyIntervals(4, (1.0 - b4 * b4) / c, (1.0 - a4 * a4) / c, consts)
    consts = quintic_constants(arc)
    return FamilyIntervals(5, consts["a5"], consts["b5"], consts)
