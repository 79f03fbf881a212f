"""Acceptance criteria, one pass/fail line per criterion.

Run with ``pytest tests/test_acceptance.py -v -s``; the lines are also
collected into the terminal summary.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from arcbest import (
    ErrorKind,
    admissible_interval,
    best_fit,
    extrema,
    brute_force_best,
    control_points,
    hausdorff_to_unit_circle_arc,
    make_arc,
    phi,
    psi,
    solve_parabolic_direct,
)
from arcbest.families import divide_simplified_error
from arcbest.lemmas import verify_lemma_suite
from arcbest.solver import grid_step

from conftest import TABLE_ANGLES

# angle key -> (d_r, phi at d_r, d_s, phi at d_s), as printed
TABLE_ONE = {
    "pi/2": (2.21535, 1.07676e-1, 2.19737, 1.09554e-1),
    "pi/3": (1.54728, 2.36383e-2, 1.54643, 2.37668e-2),
    "pi/4": (1.30843, 7.76732e-3, 1.30834, 7.78280e-3),
    "pi/6": (1.13713, 1.57677e-3, 1.13712, 1.57746e-3),
    "pi/8": (1.07713, 5.03728e-4, 1.07713, 5.03800e-4),
    "pi/12": (1.03427, 1.00191e-4, 1.03427, 1.00194e-4),
}
KINDS = (ErrorKind.RADIAL, ErrorKind.SIMPLIFIED)


def record(log, number, ok, detail):
    line = f"[{'PASS' if ok else 'FAIL'}] AC{number:<2} {detail}"
    log.append(line)
    print(line)
    assert ok, line


def last_digit(value):
    """One unit in the last of six significant digits."""
    return 10.0 ** (math.floor(math.log10(abs(value))) - 5)


def test_ac01_table_one(acceptance_log):
    start = time.perf_counter()
    worst = 0.0
    for key, row in TABLE_ONE.items():
        arc = make_arc(TABLE_ANGLES[key])
        r = best_fit(2, arc, ErrorKind.RADIAL)
        s = best_fit(2, arc, ErrorKind.SIMPLIFIED)
        got = (r.d_star, r.profile.max_abs, s.d_star, extrema(2, arc, s.d_star).max_abs)
        for g, w in zip(got, row):
            worst = max(worst, abs(g - w) / last_digit(w))
    elapsed = time.perf_counter() - start
    record(acceptance_log, 1, worst <= 1.0 and elapsed < 1.0,
           f"parabolic table worst deviation {worst:.2f} last-digit units, {elapsed:.3f} s")


def test_ac02_parabolic_closed_form(acceptance_log):
    rng = np.random.default_rng(2)
    worst = 0.0
    for _ in range(1000):
        arc = make_arc(rng.uniform(1e-6, math.pi / 2))
        iv = admissible_interval(2, arc)
        d = rng.uniform(iv.i_lo, iv.upper)
        worst = max(worst, abs(phi(2, arc, d, 0.0) - (d - (2 - arc.c)) / 2))
    record(acceptance_log, 2, worst <= 1e-12, f"phi(0) closed form, max deviation {worst:.2e}")


def test_ac03_figure_magnitudes(acceptance_log):
    arc = make_arc(math.pi / 4)
    e4 = best_fit(4, arc).profile.max_abs
    e5 = best_fit(5, arc).profile.max_abs
    ok = 2.0e-6 <= e4 <= 3.0e-6 and 1.5e-8 <= e5 <= 2.5e-8
    record(acceptance_log, 3, ok, f"quartic {e4:.4e}, quintic {e5:.4e} at pi/4")


@pytest.mark.slow
def test_ac04_oracle_equivalence(acceptance_log):
    start = time.perf_counter()
    worst = 0.0
    for degree in (2, 3, 4, 5):
        for kind in KINDS:
            for angle in TABLE_ANGLES.values():
                arc = make_arc(angle)
                d = best_fit(degree, arc, kind).d_star
                oracle = brute_force_best(degree, arc, kind)
                worst = max(worst, abs(d - oracle) / grid_step(degree, arc, 100_000))
    elapsed = time.perf_counter() - start
    record(acceptance_log, 4, worst <= 2.0 and elapsed < 60.0,
           f"oracle worst {worst:.2f} grid steps over 48 cases, {elapsed:.1f} s")


def test_ac05_route_agreement(acceptance_log):
    worst = 0.0
    for angle in TABLE_ANGLES.values():
        arc = make_arc(angle)
        worst = max(worst, abs(solve_parabolic_direct(arc) - best_fit(2, arc).d_star))
    record(acceptance_log, 5, worst <= 1e-10, f"direct vs bisection, max gap {worst:.2e}")


def test_ac06_equioscillation(acceptance_log):
    worst, ok = 0.0, True
    for degree in (2, 3, 4, 5):
        for kind in KINDS:
            for angle in TABLE_ANGLES.values():
                p = best_fit(degree, make_arc(angle), kind).profile
                pts = p.points()
                ok &= p.alternations == 3 and 0 < p.t1 < 1
                ok &= pts[0][1] * pts[1][1] < 0 and pts[1][1] * pts[2][1] < 0
                worst = max(worst, abs(p.v0 + p.v1))
    ok &= worst <= 1e-12
    record(acceptance_log, 6, ok, f"3 alternations everywhere, max |v0+v1| {worst:.2e}")


def test_ac07_hausdorff(acceptance_log):
    arc = make_arc(math.pi / 4)
    gaps = []
    for degree in (2, 3, 4, 5):
        res = best_fit(degree, arc)
        curve = control_points(degree, arc, res.d_star)
        h = hausdorff_to_unit_circle_arc(curve, arc, samples=10_000)
        gaps.append(abs(h - res.profile.max_abs))
    record(acceptance_log, 7, max(gaps) <= 1e-5, f"Hausdorff vs max|phi|, max gap {max(gaps):.2e}")


@pytest.mark.slow
def test_ac08_lemma_suite(acceptance_log):
    report = verify_lemma_suite(1000)
    smallest = min(ch.margin for ch in report.checks)
    names = ", ".join(ch.name for ch in report.failures) or "none"
    record(acceptance_log, 8, report.passed,
           f"{len(report.checks)} lemma checks, smallest margin {smallest:.2e}, failures: {names}")


def test_ac09_quintic_division(acceptance_log):
    rng = np.random.default_rng(9)
    residue = recon = 0.0
    ts = np.linspace(-1.0, 1.0, 41)
    for _ in range(1000):
        arc = make_arc(rng.uniform(1e-6, math.pi / 2))
        iv = admissible_interval(5, arc)
        d = rng.uniform(iv.i_lo, iv.i_hi)
        q, res = divide_simplified_error(control_points(5, arc, d))
        residue = max(residue, res)
        direct = psi(5, arc, d, ts)
        rebuilt = (ts * ts - 1) ** 4 * q(ts)
        recon = max(recon, float(np.max(np.abs(direct - rebuilt) / (np.abs(direct) + 1))))
    ok = residue <= 1e-10 and recon <= 1e-10
    record(acceptance_log, 9, ok, f"quintic division residue {residue:.2e}, reconstruction {recon:.2e}")


def test_ac10_determinism(acceptance_log):
    cmd = [sys.executable, "-m", "arcbest.cli", "table"]
    first = subprocess.run(cmd, capture_output=True, check=True).stdout
    second = subprocess.run(cmd, capture_output=True, check=True).stdout
    record(acceptance_log, 10, first == second and len(first) > 0,
           f"two table runs byte-identical ({len(first)} bytes)")
