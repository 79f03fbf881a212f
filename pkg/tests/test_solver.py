import math

import pytest

from arcbest import (
    BracketError,
    ConvergenceError,
    DomainError,
    ErrorKind,
    SolverConfig,
    admissible_interval,
    best_fit,
    brute_force_best,
    leading_coeff_q,
    make_arc,
    q_coeffs,
    solve_parabolic_direct,
    solve_q_root,
)
from arcbest.lemmas import quartic_alternative_roots, quintic_alternative_roots
from arcbest.solver import bisect, grid_step, iterate_tau, parabolic_quartic

SQ3 = math.sqrt(3)
SEMI = make_arc(math.pi / 2)


def test_config_validation():
    with pytest.raises(DomainError):
        SolverConfig(epsilon=0)
    with pytest.raises(DomainError):
        SolverConfig(max_outer=10)


def test_bisect_finds_sqrt2():
    assert bisect(lambda x: x * x - 2, 0.0, 2.0, 1e-15, 200) == pytest.approx(math.sqrt(2), abs=1e-14)


def test_q_root_parabola_small_tau():
    assert solve_q_root(2, SEMI, 1e-9) == pytest.approx(2.0, abs=1e-12)


def test_q_root_cubic_tau_zero():
    assert solve_q_root(3, SEMI, 0.0) == pytest.approx(4 / 3, abs=1e-13)


def test_q_root_quartic_against_closed_form():
    arc = make_arc(math.pi / 4)
    c, s, tau = arc.c, arc.s, 0.5
    d = solve_q_root(4, arc, tau)
    assert d in admissible_interval(4, arc)
    x = math.sqrt(1 - c * d)
    q4 = (
        (12 - 3 * c * c - 30 * c * d + 12 * c**3 * d + 9 * d * d + 12 * SQ3 * c * s * x - 12 * SQ3 * s * d * x) * tau**2
        + 52 - 13 * c * c - 12 * c**3 * d - 9 * d * d - 12 * SQ3 * s * d * x - 2 * c * (9 * d + 10 * SQ3 * s * x)
    ) / 64
    assert abs(q4) < 1e-14


@pytest.mark.parametrize("degree", [2, 3])
def test_q_root_cap_doubling(degree):
    # Near tau = 1 the parabola root leaves the initial cap on the semicircle.
    d = solve_q_root(degree, SEMI, 0.999)
    assert abs(q_coeffs(degree, SEMI, d)(0.999)) < 1e-12


def test_q_root_domain():
    with pytest.raises(DomainError):
        solve_q_root(2, SEMI, 1.0)


@pytest.mark.parametrize(
    "key, d_r, e_r, d_s, e_s",
    [
        ("pi/2", 2.21535, 1.07676e-1, 2.19737, 1.09554e-1),
        ("pi/3", 1.54728, 2.36383e-2, 1.54643, 2.37668e-2),
        ("pi/6", 1.13713, 1.57677e-3, 1.13712, 1.57746e-3),
    ],
)
def test_parabola_table_rows(key, d_r, e_r, d_s, e_s):
    from conftest import TABLE_ANGLES

    arc = make_arc(TABLE_ANGLES[key])
    radial = best_fit(2, arc, ErrorKind.RADIAL)
    simplified = best_fit(2, arc, ErrorKind.SIMPLIFIED)
    assert radial.d_star == pytest.approx(d_r, abs=5e-6)
    assert radial.profile.max_abs == pytest.approx(e_r, rel=5e-6)
    assert simplified.d_star == pytest.approx(d_s, abs=5e-6)


def test_figure_magnitudes():
    arc = make_arc(math.pi / 4)
    assert best_fit(4, arc).profile.max_abs == pytest.approx(2.5e-6, rel=0.1)
    assert best_fit(5, arc).profile.max_abs == pytest.approx(2e-8, rel=0.1)


def test_cubic_matches_oracle():
    arc = make_arc(math.pi / 4)
    d = best_fit(3, arc).d_star
    assert abs(d - brute_force_best(3, arc)) <= 2 * grid_step(3, arc, 100_000)


def test_convergence_error():
    cfg = SolverConfig(epsilon=1e-30, max_outer=50)
    with pytest.raises(ConvergenceError) as info:
        best_fit(2, SEMI, cfg=cfg)
    assert info.value.best_residual is not None


def test_bracket_halves_every_iteration():
    widths = [r - l for l, r, *_ in iterate_tau(4, make_arc(0.7), ErrorKind.RADIAL)]
    for a, b in zip(widths[:40], widths[1:40]):
        assert b == a / 2


def test_result_invariants(table_arc):
    for degree in (2, 3, 4, 5):
        result = best_fit(degree, table_arc, ErrorKind.SIMPLIFIED)
        interval = admissible_interval(degree, table_arc)
        assert interval.i_lo <= result.d_star <= interval.i_hi
        assert 0 < result.tau_star < 1
        assert abs(result.residual) <= 1e-12
        assert result.profile.alternations == 3
        assert result.error_kind is ErrorKind.SIMPLIFIED


def test_parabolic_quartic_degenerate_limit():
    assert parabolic_quartic(1.0, 1.0) == 0


@pytest.mark.parametrize("key, expected", [("pi/2", 2.21535), ("pi/12", 1.03427)])
def test_parabolic_direct(key, expected):
    from conftest import TABLE_ANGLES

    assert solve_parabolic_direct(make_arc(TABLE_ANGLES[key])) == pytest.approx(expected, abs=5e-6)


def test_parabolic_direct_detects_bad_quartic(monkeypatch):
    import arcbest.solver

    monkeypatch.setattr(arcbest.solver, "parabolic_quartic", lambda d, c: d * d + 1)
    with pytest.raises(BracketError):
        solve_parabolic_direct(SEMI)


def test_oracle_parabola_table_targets():
    step = grid_step(2, SEMI, 100_000)
    assert abs(brute_force_best(2, SEMI) - 2.21535) <= 2 * step
    arc = make_arc(math.pi / 3)
    assert abs(brute_force_best(2, arc, ErrorKind.SIMPLIFIED) - 1.54643) <= 2 * grid_step(2, arc, 100_000)


def test_oracle_quintic():
    arc = make_arc(math.pi / 4)
    assert abs(brute_force_best(5, arc) - best_fit(5, arc).d_star) <= 2 * grid_step(5, arc, 100_000)


@pytest.mark.parametrize("angle", [0.3, 0.6, 0.9])  # all below arccos(3/5)
def test_quartic_leading_coefficient_rejection(angle):
    arc = make_arc(angle)
    result = best_fit(4, arc)
    others = quartic_alternative_roots(arc, result.tau_star, result.d_star)
    assert others
    lc_star = leading_coeff_q(4, arc, result.d_star)
    for d in others:
        assert abs(q_coeffs(4, arc, d)(result.tau_star)) < 1e-10
        assert leading_coeff_q(4, arc, d) > lc_star


def test_quartic_alternative_interpolant_is_worse():
    arc = make_arc(math.pi / 4)
    best = best_fit(4, arc)
    for d in quartic_alternative_roots(arc, best.tau_star, best.d_star):
        assert d not in admissible_interval(4, arc)


@pytest.mark.parametrize("angle", [0.4, math.pi / 4, 1.2])
def test_quintic_leading_coefficient_rejection(angle):
    arc = make_arc(angle)
    result = best_fit(5, arc)
    lc_star = leading_coeff_q(5, arc, result.d_star)
    others = quintic_alternative_roots(arc, result.tau_star, result.d_star)
    assert others
    for d in others:
        assert leading_coeff_q(5, arc, d) > lc_star
