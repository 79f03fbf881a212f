"""Best approximants of the arc within each one-parameter family.

The optimum is found by bisection on the interior zero ``tau`` of the error:
for every trial ``tau`` the family parameter is the unique admissible root of
``q_n(tau, .)``, and ``tau`` is moved until the central and outer extrema of
the error balance.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .error_analysis import ErrorKind, ErrorProfile, error_values, profile_from_q
from .exceptions import BracketError, ConvergenceError, DomainError
from .families import admissible_interval, check_degree, control_points_array, q_coeffs
from .geometry import ArcSpec, bernstein_matrix

MIN_BRACKET = 1e-16
MAX_CAP_DOUBLINGS = 60
BOUND_SLACK = 1e-15


@dataclass(frozen=True)
class SolverConfig:
    epsilon: float = 1e-12
    inner_tol: float = 1e-14
    max_outer: int = 200
    max_inner: int = 200
    grid_points: int = 100_000

    def __post_init__(self):
        if not (self.epsilon > 0 and self.inner_tol > 0):
            raise DomainError("epsilon and inner_tol must be positive")
        if self.max_outer < 50 or self.max_inner < 50:
            raise DomainError("iteration caps must be at least 50")
        if self.grid_points < 2:
            raise DomainError("grid_points must be at least 2")


DEFAULT_CONFIG = SolverConfig()


@dataclass(frozen=True)
class SolverResult:
    degree: int
    arc: ArcSpec
    d_star: float
    tau_star: float
    profile: ErrorProfile
    residual: float
    outer_iterations: int
    error_kind: ErrorKind
    termination: str  # "residual" or "bracket"


def bisect(f, lo: float, hi: float, tol: float, max_iter: int) -> float:
    """Plain bisection on a sign change of ``f`` over ``[lo, hi]``."""
    flo = f(lo)
    if flo == 0:
        return lo
    for _ in range(max_iter):
        mid = 0.5 * (lo + hi)
        if hi - lo <= tol * max(1.0, abs(mid)) or mid in (lo, hi):
            return mid
        fmid = f(mid)
        if fmid == 0:
            return mid
        if (fmid > 0) == (flo > 0):
            lo, flo = mid, fmid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def solve_q_root(degree: int, arc: ArcSpec, tau: float, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """The unique root ``d`` of ``q_n(tau, d) = 0`` in the admissible interval."""
    degree = check_degree(degree)
    if not 0.0 <= tau < 1.0:
        raise DomainError(f"tau must lie in [0, 1), got {tau!r}")
    interval = admissible_interval(degree, arc)

    def f(d):
        return float(q_coeffs(degree, arc, d)(tau))

    lo, hi = interval.i_lo, interval.upper
    flo, fhi = f(lo), f(hi)
    doublings = 0
    while flo * fhi > 0:
        if not interval.i_hi_unbounded or doublings >= MAX_CAP_DOUBLINGS:
            raise BracketError(
                f"q_{degree}({tau!r}, .) has no sign change on [{lo!r}, {hi!r}]"
            )
        hi = lo + 2.0 * (hi - lo)
        fhi = f(hi)
        doublings += 1
    if fhi == 0:
        return hi
    return bisect(f, lo, hi, cfg.inner_tol, cfg.max_inner)


def _profile_at(degree, arc, tau, kind, cfg):
    d = solve_q_root(degree, arc, tau, cfg)
    return d, profile_from_q(degree, q_coeffs(degree, arc, d), kind)


def iterate_tau(degree: int, arc: ArcSpec, kind: ErrorKind, cfg: SolverConfig = DEFAULT_CONFIG):
    """Yield ``(tau_l, tau_r, tau, d_tau, profile)`` for each outer bisection step."""
    tau_l, tau_r = 0.0, 1.0
    for _ in range(cfg.max_outer):
        tau = 0.5 * (tau_l + tau_r)
        d, profile = _profile_at(degree, arc, tau, kind, cfg)
        yield tau_l, tau_r, tau, d, profile
        # The central lobe spans (-tau, tau) and grows with tau.
        if abs(profile.v0) < abs(profile.v1):
            tau_l = tau
        else:
            tau_r = tau


def best_fit(
    degree: int,
    arc: ArcSpec,
    kind: ErrorKind = ErrorKind.RADIAL,
    cfg: SolverConfig = DEFAULT_CONFIG,
) -> SolverResult:
    """Equioscillating member of the family with minimal maximal error."""
    degree = check_degree(degree)
    kind = ErrorKind(kind)
    best = None
    for it, (tau_l, tau_r, tau, d, profile) in enumerate(iterate_tau(degree, arc, kind, cfg), 1):
        residual = profile.v0 + profile.v1
        if best is None or abs(residual) < abs(best[0]):
            best = (residual, tau, d, profile, it)
        if abs(residual) <= cfg.epsilon and profile.alternations == 3:
            return SolverResult(degree, arc, d, tau, profile, residual, it, kind, "residual")
        if tau_r - tau_l < MIN_BRACKET:
            if abs(best[0]) <= cfg.epsilon:
                residual, tau, d, profile, it = best
                return SolverResult(degree, arc, d, tau, profile, residual, it, kind, "bracket")
            raise ConvergenceError(
                f"tau bracket collapsed with residual {best[0]:.3e} > {cfg.epsilon:g}",
                best_residual=best[0],
            )
    raise ConvergenceError(
        f"no equioscillation within {cfg.max_outer} iterations; best residual {best[0]:.3e}",
        best_residual=best[0],
    )


def parabolic_quartic(d, c):
    """Quartic whose relevant root balances the parabolic radial error."""
    return (
        d**4 - 8 * d**3 + 2 * (c * c + 4 * c + 6) * d * d
        - 8 * c * (4 - c) * d + c**4 - 8 * c**3 + 12 * c * c + 4
    )


def solve_parabolic_direct(arc: ArcSpec, cfg: SolverConfig = DEFAULT_CONFIG) -> float:
    """Root of the parabolic balance quartic on ``(2 - c, 3 - 3c + c^2)``."""
    c = arc.c
    lo, hi = 2.0 - c, 3.0 - 3.0 * c + c * c
    if not (parabolic_quartic(lo, c) > 0 > parabolic_quartic(hi, c)):
        raise BracketError(f"balance quartic does not change sign on [{lo!r}, {hi!r}]")
    return bisect(lambda d: parabolic_quartic(d, c), lo, hi, cfg.inner_tol, cfg.max_inner)


def oracle_grid(degree: int, arc: ArcSpec, grid_points: int) -> np.ndarray:
    """Uniform parameter grid over the closed (capped) admissible interval."""
    interval = admissible_interval(degree, arc)
    return np.linspace(interval.i_lo, interval.upper, grid_points)


def _sampled_max_error(degree, arc, ds, basis, kind, chunk):
    out = np.empty(len(ds))
    for start in range(0, len(ds), chunk):
        pts = control_points_array(degree, arc, ds[start : start + chunk])
        x = basis @ pts[:, :, 0].T
        y = basis @ pts[:, :, 1].T
        norm2 = x * x + y * y
        # The radial error is increasing in the simplified one, so only the
        # extreme simplified values need transforming.
        hi = error_values(norm2.max(axis=0) - 1.0, kind)
        lo = error_values(norm2.min(axis=0) - 1.0, kind)
        out[start : start + chunk] = np.maximum(np.abs(hi), np.abs(lo))
    return out


def brute_force_best(
    degree: int,
    arc: ArcSpec,
    kind: ErrorKind = ErrorKind.RADIAL,
    cfg: SolverConfig = DEFAULT_CONFIG,
    t_points: int = 1001,
    chunk: int = 4096,
) -> float:
    """Grid search for the parameter minimising the sampled maximal error.

    Independent of the factorization: errors come from direct evaluation of
    the curves on a uniform grid of ``[0, 1]``. A nested coarse t-grid gives
    a lower bound used to skip parameters that cannot win, so the result is
    the exact argmin over the full grid.
    """
    degree = check_degree(degree)
    kind = ErrorKind(kind)
    ds = oracle_grid(degree, arc, cfg.grid_points)
    ts = np.linspace(0.0, 1.0, t_points)
    stride = max(1, (t_points - 1) // 100)
    full = bernstein_matrix(degree, ts)
    coarse = full[::stride]
    lower = _sampled_max_error(degree, arc, ds, coarse, kind, chunk)
    order = np.argsort(lower, kind="stable")
    best_val = _sampled_max_error(degree, arc, ds[order[:1]], full, kind, chunk)[0]
    # Slack covers rounding differences between the two matrix products.
    candidates = order[lower[order] <= best_val + BOUND_SLACK]
    exact = _sampled_max_error(degree, arc, ds[candidates], full, kind, chunk)
    return float(ds[candidates[int(np.argmin(exact))]])


def grid_step(degree: int, arc: ArcSpec, grid_points: int) -> float:
    interval = admissible_interval(degree, arc)
    return (interval.upper - interval.i_lo) / (grid_points - 1)


def half_angle_label(half_angle: float) -> str:
    """``pi/k`` for the canonical table angles, otherwise a plain number."""
    for k in (2, 3, 4, 6, 8, 12):
        if math.isclose(half_angle, math.pi / k, rel_tol=0, abs_tol=1e-12):
            return f"π/{k}"
    return f"{half_angle:.6g}"
