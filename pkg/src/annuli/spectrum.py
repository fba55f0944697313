"""Period map of the profile ODE and its quantization T(c) = 2 pi / n.

``T(c) = 4 c K(sqrt(1 - c^2))``.  Since ``K(k) = pi / (2 agm(1, k'))`` and the
complementary modulus here is ``c`` itself, this is

    T(c) = 2 pi c / agm(1, c),

which is evaluated without ever forming ``sqrt(1 - c^2)``.  ``agm(1, c) > c``
on (0, 1), so T stays strictly below 2 pi and mode n = 1 has no solution;
the would-be mode-1 annulus degenerates to the equator.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass

from scipy.optimize import brentq

from .elliptic import agm
from .errors import InvalidArgumentError, NoSolutionError
from .profile import ProfileConstant

__all__ = ["ModeSolution", "period_of", "solve_mode", "spectrum", "DEFAULT_ROOT_TOL"]

TWO_PI = 2.0 * math.pi
DEFAULT_ROOT_TOL = 1e-15


@dataclass(frozen=True)
class ModeSolution:
    """Profile constant closing up after exactly ``n`` oscillations per revolution.

    ``sequence_index = n - 1`` is the position of this annulus in the decreasing
    sequence of initial values r(0) = arcsin(c_n), counting from 1.
    """

    n: int
    c_n: ProfileConstant
    period: float
    residual: float

    @property
    def c(self) -> float:
        return self.c_n.c

    @property
    def r_min(self) -> float:
        return self.c_n.r_min

    @property
    def sequence_index(self) -> int:
        return self.n - 1


def period_of(c) -> float:
    """Minimal period of the profile with first integral ``c``."""
    if isinstance(c, ProfileConstant):
        c = c.c
    c = float(c)
    if not (math.isfinite(c) and 0.0 < c < 1.0):
        raise InvalidArgumentError(f"c must lie in (0, 1), got {c!r}")
    return TWO_PI * c / agm(1.0, c)


def _initial_bracket(n: int) -> tuple[float, float]:
    # c ~ pi / (2 n ln(4 n)) from T(c) ~ 4 c ln(4 / c) for small c
    guess = min(math.pi / (2.0 * n * math.log(4.0 * n)), 0.5)
    target = TWO_PI / n
    lo, hi = 0.5 * guess, min(2.0 * guess, 0.999)
    while period_of(lo) > target:
        lo *= 0.5
    while period_of(hi) < target:
        hi = 0.5 * (hi + 1.0)
        if 1.0 - hi < 1e-15:
            raise NoSolutionError(f"no bracket found for mode {n}")
    return lo, hi


def solve_mode(n: int, root_tol: float = DEFAULT_ROOT_TOL) -> ModeSolution:
    """Solve ``T(c) = 2 pi / n`` for the mode-``n`` profile constant."""
    if isinstance(n, bool) or int(n) != n:
        raise InvalidArgumentError(f"mode must be an integer, got {n!r}")
    n = int(n)
    if n <= 0:
        raise InvalidArgumentError(f"mode must be positive, got {n}")
    if n == 1:
        raise NoSolutionError(
            "no periodic solution: period supremum is 2π "
            "(T(c) < 2π on (0, 1); mode 1 degenerates to the equator r = π/2)")
    target = TWO_PI / n
    lo, hi = _initial_bracket(n)
    c = brentq(lambda x: period_of(x) - target, lo, hi, xtol=root_tol, rtol=8.9e-16,
               maxiter=200)
    period = period_of(c)
    return ModeSolution(n, ProfileConstant(c), period, abs(n * period - TWO_PI))


def spectrum(n_max: int, root_tol: float = DEFAULT_ROOT_TOL, workers: int | None = None):
    """Mode solutions for n = 2..n_max, in mode order."""
    if int(n_max) != n_max or n_max < 2:
        raise InvalidArgumentError(f"n_max must be an integer >= 2, got {n_max!r}")
    modes = range(2, int(n_max) + 1)
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda n: solve_mode(n, root_tol), modes))
    return [solve_mode(n, root_tol) for n in modes]
