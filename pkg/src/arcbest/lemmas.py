"""Sampled numeric restatements of the sign, monotonicity and convexity facts
that make the bisection solver well posed.

Each check evaluates a quantity that the corresponding lemma claims to be
strictly positive and reports the smallest value seen (its margin).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from scipy.optimize import brentq

from . import solver
from .families import (
    admissible_interval,
    control_points_array,
    leading_coeff_q,
    q_coeffs,
    quartic_constants,
    quintic_constants,
    quintic_r,
    r4_poly,
)
from .geometry import ArcSpec, bernstein_matrix, make_arc

# Draws stay where the claimed quantities are resolvable in double precision:
# most of them vanish like powers of (1 - c) or of t.
MIN_HALF_ANGLE = math.pi / 12
T_RANGE = (0.01, 0.99)


@dataclass(frozen=True)
class LemmaCheck:
    name: str
    claim: str
    margin: float
    evaluations: int

    @property
    def passed(self) -> bool:
        return bool(self.margin > 0)


@dataclass(frozen=True)
class LemmaReport:
    checks: tuple

    @property
    def passed(self) -> bool:
        return all(ch.passed for ch in self.checks)

    @property
    def failures(self):
        return [ch for ch in self.checks if not ch.passed]

    def lines(self):
        for ch in self.checks:
            status = "PASS" if ch.passed else "FAIL"
            yield f"{status} {ch.name:<14} margin={ch.margin:.6e} n={ch.evaluations}  {ch.claim}"


def _arcs(rng, count, min_angle=MIN_HALF_ANGLE):
    return [make_arc(a) for a in rng.uniform(min_angle, math.pi / 2, count)]


def _ts(rng, count):
    return rng.uniform(*T_RANGE, count)


def _pair(rng, lo, hi):
    """Two ordered points of ``(lo, hi)`` at least 1% of the width apart."""
    gap = 0.01 * (hi - lo)
    d1 = rng.uniform(lo, hi - gap)
    d2 = rng.uniform(d1 + gap, hi)
    return d1, d2


def _q(degree, arc, t, d):
    return float(q_coeffs(degree, arc, d)(t))


def _check(name, claim, values):
    values = np.asarray(values, dtype=float)
    margin = float(values.min()) if values.size else math.nan
    return LemmaCheck(name, claim, margin, int(values.size))


def lemma_3_1(rng, samples):
    f = solver.parabolic_quartic
    cs = np.array([a.c for a in _arcs(rng, samples)])
    first = [-f(3 - 3 * c + c * c, c) for c in cs]
    second = [f(2 - c - x, c) for c, x in zip(cs, 10.0 * rng.random(samples) ** 2)]
    h = 1e-7
    third = []
    for c, u in zip(cs, rng.random(samples)):
        lo, hi = 2 - c, 3 - 3 * c + c * c
        d = lo + u * (hi - lo)
        third.append(-(f(d + h, c) - f(d - h, c)) / (2 * h))
    return [
        _check("Lemma 3.1(i)", "f(3-3c+c^2) < 0", first),
        _check("Lemma 3.1(ii)", "f > 0 on (-inf, 2-c]", second),
        _check("Lemma 3.1(iii)", "f' < 0 on [2-c, 3-3c+c^2]", third),
    ]


def lemma_4_1(rng, samples):
    values = []
    for _ in range(samples):
        m = int(rng.integers(1, 6))
        b1, b2 = np.sort(rng.normal(size=2))
        a2 = rng.normal()
        a1 = a2 + (b2 - b1) - (rng.exponential() if rng.random() < 0.8 else 0.0)
        t = rng.uniform(-0.99, 0.99)
        w = (t * t - 1.0) ** m
        diff = w * (a1 * t * t + b1) - w * (a2 * t * t + b2)
        values.append(diff if m % 2 else -diff)
    return [_check("Lemma 4.1", "theta_1 - theta_2 has the sign of (-1)^(m+1) on (-1,1)", values)]


def lemma_5(rng, samples):
    arcs = _arcs(rng, samples)
    first = []
    second = []
    for arc, tau in zip(arcs, rng.uniform(0.0, 1.0, samples)):
        lead = (_q(2, arc, tau, 3.0) - 2 * _q(2, arc, tau, 2.0) + _q(2, arc, tau, 1.0)) / 2
        first += [_q(2, arc, tau, 1.0), -lead]
        d1, d2 = _pair(rng, 1.0, 11.0)
        for t in (0.0, 1.0):
            second.append((_q(2, arc, t, d1) - _q(2, arc, t, d2)) / (d2 - d1))
    return [
        _check("Lemma 5.1", "q2(tau,1) > 0 and q2(tau,.) has negative leading coefficient", first),
        _check("Lemma 5.2", "q2(0,.) and q2(1,.) decrease on I2", second),
    ]


def lemma_6(rng, samples):
    arcs = _arcs(rng, samples)
    first = []
    second = []
    for arc, tau in zip(arcs, _ts(rng, samples)):
        lead = (_q(3, arc, tau, 2.0) - 2 * _q(3, arc, tau, 1.0) + _q(3, arc, tau, 0.0)) / 2
        first += [-_q(3, arc, tau, 0.0), lead]
        d1, d2 = _pair(rng, 0.0, 10.0)
        for t in (0.0, 1.0):
            second.append((_q(3, arc, t, d2) - _q(3, arc, t, d1)) / (d2 - d1))
    return [
        _check("Lemma 6.1", "q3(tau,0) < 0 and q3(tau,.) has positive leading coefficient", first),
        _check("Lemma 6.2", "q3(0,.) and q3(1,.) increase on I3", second),
    ]


def quartic_alternative_roots(arc: ArcSpec, tau: float, d_star: float):
    """Roots of ``q_4(tau, .)`` other than ``d_star``, via the substitution x = sqrt(1 - c d)."""
    roots = r4_poly(arc, tau).roots()
    x_star = math.sqrt(1.0 - arc.c * d_star)
    out = []
    for x in roots:
        if abs(x.imag) > 1e-9 or x.real < 0 or abs(x.real - x_star) < 1e-9:
            continue
        out.append((1.0 - x.real**2) / arc.c)
    return out


def lemma_7(rng, samples):
    arcs = _arcs(rng, samples)
    signs, bracket, rejection, monotone = [], [], [], []
    for arc, t in zip(arcs, _ts(rng, samples)):
        a4, b4 = quartic_constants(arc)
        r4 = r4_poly(arc, t)
        signs += [r4(-1.0), -r4(a4), r4(b4), r4(1.0), -r4.coef[-1]]

        interval = admissible_interval(4, arc)
        lo, hi = interval.i_lo, interval.i_hi
        bracket.append(-_q(4, arc, t, lo) * _q(4, arc, t, hi))

        d_star = solver.solve_q_root(4, arc, t)
        lc_star = abs(leading_coeff_q(4, arc, d_star))
        for d in quartic_alternative_roots(arc, t, d_star):
            rejection.append(abs(leading_coeff_q(4, arc, d)) - lc_star)

        d1, d2 = _pair(rng, lo, hi)
        for tt in (0.0, 1.0):
            monotone.append((_q(4, arc, tt, d1) - _q(4, arc, tt, d2)) / (d2 - d1))
    return [
        _check("Lemma 7.1", "r4(t,.) signs +,-,+,+ at -1,a4,b4,1 with negative leading coefficient", signs),
        _check("Lemma 7.2", "q4(tau,.) changes sign across I4", bracket),
        _check("Lemma 7.3", "other roots of q4(tau,.) have larger leading coefficient", rejection),
        _check("Lemma 7.4", "q4(0,.) and q4(1,.) decrease on I4", monotone),
    ]


def _quintic_q_at(arc, t, ds):
    """``q_5(t, d)`` for many ``d`` by direct evaluation of the curves."""
    pts = control_points_array(5, arc, ds)
    basis = bernstein_matrix(5, [t])[0]
    x = pts[:, :, 0] @ basis
    y = pts[:, :, 1] @ basis
    return (x * x + y * y - 1.0) / (t * t - 1.0) ** 4


def quintic_alternative_roots(arc: ArcSpec, tau: float, d_star: float, upper: float = 4.0, grid: int = 4000):
    """Sign changes of ``q_5(tau, .)`` on ``(0, upper]`` away from ``d_star``."""
    ds = np.linspace(upper / grid, upper, grid)
    vals = _quintic_q_at(arc, tau, ds)
    out = []
    for i in np.nonzero(np.sign(vals[:-1]) * np.sign(vals[1:]) < 0)[0]:
        root = brentq(lambda d: _q(5, arc, tau, d), ds[i], ds[i + 1], xtol=1e-15)
        if abs(root - d_star) > 1e-6:
            out.append(root)
    return out


def lemma_8(rng, samples):
    arcs = _arcs(rng, samples)
    r_checks, convex, zeros, increasing = [], [], [], []
    for arc, t in zip(arcs, _ts(rng, samples)):
        k = quintic_constants(arc)
        alpha5, a5, b5, beta5 = k["alpha5"], k["a5"], k["b5"], k["beta5"]

        d1, d2 = _pair(rng, alpha5, alpha5 + 5.0)
        r_checks += [(quintic_r(arc, d2) - quintic_r(arc, d1)) / (d2 - d1), -quintic_r(arc, b5), quintic_r(arc, beta5)]
        d1, d2 = _pair(rng, alpha5, b5)
        r_checks.append((leading_coeff_q(5, arc, d1) - leading_coeff_q(5, arc, d2)) / (d2 - d1))
        d1, d2 = _pair(rng, beta5, beta5 + 5.0)
        r_checks.append((leading_coeff_q(5, arc, d2) - leading_coeff_q(5, arc, d1)) / (d2 - d1))

        h = 0.01 * beta5
        d = rng.uniform(h, beta5 - h)
        convex.append((_q(5, arc, t, d - h) - 2 * _q(5, arc, t, d) + _q(5, arc, t, d + h)) / (h * h))

        zeros += [_q(5, arc, t, alpha5), -_q(5, arc, t, a5), _q(5, arc, t, b5)]

        d1, d2 = _pair(rng, a5, b5)
        for tt in (0.0, 1.0):
            increasing.append((_q(5, arc, tt, d2) - _q(5, arc, tt, d1)) / (d2 - d1))
        d_star = solver.solve_q_root(5, arc, t)
        lc_star = leading_coeff_q(5, arc, d_star)
        for other in quintic_alternative_roots(arc, t, d_star):
            increasing.append(leading_coeff_q(5, arc, other) - lc_star)
    return [
        _check("Lemma 8.1", "r increases on (alpha5,inf); lc decreases on (alpha5,b5), increases on (beta5,inf)", r_checks),
        _check("Lemma 8.2", "q5(t,.) is convex on (0,beta5)", convex),
        _check("Lemma 8.3", "q5(t,.) signs +,-,+ at alpha5, a5, b5", zeros),
        _check("Lemma 8.4", "q5(0,.), q5(1,.) increase on I5; other roots have larger lc", increasing),
    ]


def verify_lemma_suite(samples: int = 1000, seed: int = 0) -> LemmaReport:
    if samples < 100:
        raise ValueError(f"samples must be at least 100, got {samples}")
    rng = np.random.default_rng(seed)
    checks = []
    for group in (lemma_3_1, lemma_4_1, lemma_5, lemma_6, lemma_7, lemma_8):
        checks += group(rng, samples)
    return LemmaReport(tuple(checks))
