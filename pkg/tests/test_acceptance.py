"""Acceptance criteria 1-11, one PASS/FAIL line each.

Run with ``pytest tests/test_acceptance.py -s`` to see the lines inline; they
are also repeated in the terminal summary.
"""

import math
import subprocess
import sys
import time

import numpy as np
import pytest

from annuli.ambient import AmbientPoint, boundary_second_fundamental_form, ricci_eigenvalues
from annuli.elliptic import complete_elliptic_k
from annuli.profile import closed_form_profile, integrate_profile, measure_period
from annuli.spectrum import solve_mode, spectrum
from annuli.surface import (
    AnnulusSurface,
    first_variation_check,
    free_boundary_check,
    mean_curvature_residual,
    noncompactness_report,
    principal_curvatures,
    shape_operator,
)

from conftest import C_MODE, control_surface

SOLVED_MODES = (2, 3, 5, 10, 20, 50)
BUMPS = (
    ("cos 3t", lambda t: np.cos(3 * t)),
    ("sin t + 1/2", lambda t: np.sin(t) + 0.5),
    ("sin^2 2t", lambda t: np.sin(2 * t) ** 2),
)


def quarter_period_route(c):
    """Closed-form period ``4 c K(sqrt(1 - c^2))``, independent of the ODE."""
    return 4.0 * c * complete_elliptic_k(k_prime=c)


def test_criterion_01_solution_routes(criterion):
    start = time.perf_counter()
    t = np.linspace(0.0, 2.0 * math.pi, 20001)
    worst = 0.0
    for c in (0.9, 0.5, C_MODE[2], C_MODE[3]):
        curve = integrate_profile(c)
        r_ode, _ = curve(t)
        r_cf, _ = closed_form_profile(c, t)
        worst = max(worst, float(np.max(np.abs(r_ode - r_cf))))
    elapsed = time.perf_counter() - start
    ok = worst < 1e-8 and elapsed < 2.0
    criterion(1, ok, f"max |r_ODE - r_closed| = {worst:.2e} (< 1e-8), {elapsed:.2f} s (< 2 s)")
    assert ok


def test_criterion_02_period_consistency(criterion):
    start = time.perf_counter()
    worst = 0.0
    for c in np.linspace(0.05, 0.95, 20):
        worst = max(worst, abs(measure_period(c) - quarter_period_route(c)))
    elapsed = time.perf_counter() - start
    ok = worst < 1e-8 and elapsed < 5.0
    criterion(2, ok, f"max |T_measured - 4cK| = {worst:.2e} (< 1e-8), {elapsed:.2f} s (< 5 s)")
    assert ok


def test_criterion_03_quantization(criterion):
    start = time.perf_counter()
    modes = spectrum(50)
    elapsed = time.perf_counter() - start
    c = np.array([m.c for m in modes])
    gap = max(abs(m.n * quarter_period_route(m.c) - 2.0 * math.pi) for m in modes)
    decreasing = bool(np.all(np.diff(c) < 0))
    ok = gap < 1e-10 and decreasing and c[-1] < 0.02 and elapsed < 5.0
    criterion(3, ok, f"max |n T(c_n) - 2 pi| = {gap:.2e} (< 1e-10), decreasing={decreasing}, "
                     f"c_50 = {c[-1]:.6f} (< 0.02), {elapsed:.2f} s (< 5 s)")
    assert ok


def test_criterion_04_minimality(criterion):
    start = time.perf_counter()
    h_worst = anti_worst = 0.0
    for n in (2, 3, 5, 10):
        s = AnnulusSurface.from_mode(n, integrate=False)
        h_worst = max(h_worst, mean_curvature_residual(s, 100_000))
        k1, k2 = principal_curvatures(*s.evaluate(np.linspace(0, 2 * math.pi, 100_000)))
        anti_worst = max(anti_worst, float(np.max(np.abs(k1 + k2))))
    elapsed = time.perf_counter() - start
    ok = h_worst < 1e-7 and anti_worst < 1e-7 and elapsed < 10.0
    criterion(4, ok, f"sup |H| = {h_worst:.2e}, sup |k1 + k2| = {anti_worst:.2e} (< 1e-7), "
                     f"{elapsed:.2f} s (< 10 s)")
    assert ok


def test_criterion_05_conservation(criterion):
    drift = {n: AnnulusSurface.from_mode(n).profile.first_integral_drift() for n in SOLVED_MODES}
    worst = max(drift.values())
    ok = worst < 1e-9
    criterion(5, ok, f"max first-integral drift over modes {SOLVED_MODES} = {worst:.2e} (< 1e-9)")
    assert ok


def test_criterion_06_free_boundary(criterion, rng):
    surfaces = [AnnulusSurface.from_mode(n, integrate=False) for n in SOLVED_MODES]
    surfaces.append(control_surface())
    t = rng.uniform(0.0, 2.0 * math.pi, 200)
    worst = max(max(free_boundary_check(s, t)) for s in surfaces)
    ok = worst < 1e-12
    criterion(6, ok, f"max |<nu, d_r>|, |<nu, d_t>| = {worst:.2e} (< 1e-12), "
                     "solved modes and control profile")
    assert ok


def test_criterion_07_noncompactness(criterion):
    start = time.perf_counter()
    rows = noncompactness_report(50)
    elapsed = time.perf_counter() - start
    sup_a = np.array([row.sup_A for row in rows])
    r_min = np.array([row.r_min for row in rows])
    n = np.array([row.n for row in rows])
    increasing = bool(np.all(np.diff(sup_a) > 0))
    dominates = bool(np.all(sup_a >= n))
    decreasing = bool(np.all(np.diff(r_min) < 0))
    ok = increasing and dominates and decreasing and r_min[-1] < 0.03 and elapsed < 10.0
    criterion(7, ok, f"sup|A| increasing={increasing}, sup|A|(n) >= n: {dominates}, "
                     f"sup|A|(50) = {sup_a[-1]:.2f}, r_min decreasing={decreasing}, "
                     f"r_min(50) = {r_min[-1]:.5f} (< 0.03), {elapsed:.2f} s (< 10 s)")
    assert ok


def test_criterion_08_hypotheses(criterion, rng):
    lowest = min(
        min(ricci_eigenvalues(AmbientPoint(rng.uniform(0.01, math.pi - 0.01),
                                           rng.uniform(0, math.pi), rng.uniform(0, 2 * math.pi))))
        for _ in range(100))
    second = 0.0
    for _ in range(50):
        p = AmbientPoint(rng.uniform(0.01, math.pi - 0.01), float(rng.choice([0.0, math.pi])),
                         rng.uniform(0, 2 * math.pi))
        second = max(second, float(np.max(np.abs(boundary_second_fundamental_form(p)))))
    ok = lowest >= -1e-6 and second < 1e-10
    criterion(8, ok, f"min Ricci eigenvalue = {lowest:.2e} (>= -1e-6), "
                     f"max |II_boundary| = {second:.2e} (< 1e-10)")
    assert ok


def test_criterion_09_first_variation(criterion):
    worst = 0.0
    for n in (2, 3):
        s = AnnulusSurface.from_mode(n, integrate=False)
        for _, bump in BUMPS:
            worst = max(worst, abs(first_variation_check(s, bump)))
    control = abs(first_variation_check(control_surface(), np.sin))
    ok = worst < 1e-5 and control > 1e-2
    criterion(9, ok, f"max |dA/deps| on modes 2, 3 = {worst:.2e} (< 1e-5), "
                     f"control |dA/deps| = {control:.3e} (> 1e-2)")
    assert ok


def test_criterion_10_curvature_routes(criterion, rng):
    start = time.perf_counter()
    worst = 0.0
    per_mode = 2000
    for n in (2, 3, 5, 10, 50):
        s = AnnulusSurface.from_mode(n, integrate=False)
        for theta, t in zip(rng.uniform(0, math.pi, per_mode), rng.uniform(0, 2 * math.pi, per_mode)):
            worst = max(worst, shape_operator(s, theta, t).route_gap)
    elapsed = time.perf_counter() - start
    ok = worst < 1e-6
    criterion(10, ok, f"max closed-form vs covariant gap = {worst:.2e} (< 1e-6) at 10^4 points "
                      f"over modes 2, 3, 5, 10, 50, {elapsed:.2f} s")
    assert ok


def _cli(*argv):
    return subprocess.run([sys.executable, "-m", "annuli", *argv], capture_output=True, text=True)


def test_criterion_11_cli(criterion, tmp_path):
    verify = _cli("verify", "--mode", "3")
    solve = _cli("solve", "--mode", "1")
    paths = [tmp_path / f"run{i}.obj" for i in (1, 2)]
    mesh_codes = [_cli("mesh", "--mode", "2", "--res", "64x256", "--out", str(p)).returncode
                  for p in paths]
    ply = [tmp_path / f"run{i}.ply" for i in (1, 2)]
    mesh_codes += [_cli("mesh", "--mode", "5", "--projection", "full5d", "--res", "16x64",
                        "--out", str(p)).returncode for p in ply]
    stable = (paths[0].read_bytes() == paths[1].read_bytes()
              and ply[0].read_bytes() == ply[1].read_bytes())
    message = "no periodic solution: period supremum is 2π" in solve.stderr
    ok = verify.returncode == 0 and solve.returncode == 3 and message and stable and mesh_codes == [0] * 4
    criterion(11, ok, f"verify --mode 3 -> {verify.returncode} (0), solve --mode 1 -> "
                      f"{solve.returncode} (3) message={message}, mesh bytes stable={stable}")
    assert ok
