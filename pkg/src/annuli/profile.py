"""Rotationally symmetric minimal profiles r(t) in S^2_+ x S^1.

The surface ``f(theta, t) = (x(r(t), theta), t)`` is minimal exactly when

    r'' = (1 + r'^2) cot r,

an autonomous ODE with first integral ``c = sin r / sqrt(1 + r'^2)``.  Starting
from a turning point ``r(0) = arcsin c, r'(0) = 0`` the solution is

    cos r(t) = k cd(t / c, k),   k = sqrt(1 - c^2),

which oscillates between ``arcsin c`` and ``pi - arcsin c`` with period
``4 c K(k)``.  Two further identities follow from ``dn^2 + k^2 sn^2 = 1``:
``sin r = c / dn`` and ``r' = k sn / dn``; they let the profile be evaluated
without any square-root sign ambiguity.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np
from scipy.integrate import solve_ivp

from .elliptic import jacobi_sn_cn_dn
from .errors import (
    DomainError,
    IntegrationFailure,
    InvalidArgumentError,
    NoOscillationError,
)

__all__ = [
    "ProfileConstant",
    "ProfileCurve",
    "ode_rhs",
    "first_integral",
    "closed_form_profile",
    "closed_form_jet",
    "integrate_profile",
    "measure_period",
    "DEFAULT_ODE_TOL",
    "default_tol",
]

TWO_PI = 2.0 * math.pi
DEFAULT_ODE_TOL = 1e-10


def default_tol(c: float) -> float:
    """Integrator tolerance used when none is given.

    ``r'`` peaks at ``sqrt(1 - c^2) / c``, so a fixed relative tolerance lets
    the absolute error in r' grow like 1/c; the default shrinks with c.
    """
    return min(DEFAULT_ODE_TOL, max(1e-13, 3.0 * DEFAULT_ODE_TOL * float(c)))


@dataclass(frozen=True)
class ProfileConstant:
    """Value ``c`` of the first integral; indexes one profile."""

    c: float

    def __post_init__(self):
        c = float(self.c)
        if not (math.isfinite(c) and 0.0 < c < 1.0):
            raise InvalidArgumentError(f"profile constant must lie in (0, 1), got {self.c!r}")
        object.__setattr__(self, "c", c)

    @property
    def r_min(self) -> float:
        """Initial (and minimal) value of r, ``arcsin c``."""
        return math.asin(self.c)

    @property
    def k(self) -> float:
        """Jacobi modulus of the closed-form solution."""
        return math.sqrt((1.0 - self.c) * (1.0 + self.c))

    @classmethod
    def from_r_min(cls, r_min: float) -> ProfileConstant:
        if not 0.0 < r_min < 0.5 * math.pi:
            raise InvalidArgumentError(f"r_min must lie in (0, pi/2), got {r_min!r}")
        return cls(math.sin(r_min))


def _as_constant(c) -> ProfileConstant:
    return c if isinstance(c, ProfileConstant) else ProfileConstant(c)


def _c_value(c, allow_equator: bool) -> float:
    if isinstance(c, ProfileConstant):
        return c.c
    c = float(c)
    if allow_equator and c == 1.0:
        return c
    return ProfileConstant(c).c


@dataclass(frozen=True)
class ProfileCurve:
    """Sampled numerical solution of the profile ODE.

    ``period`` is the measured distance between alternate turning points, or
    ``inf`` for the equatorial solution ``r = pi/2``.
    """

    c: float
    t: np.ndarray
    r: np.ndarray
    r_prime: np.ndarray
    period: float
    _dense: object = field(default=None, repr=False, compare=False)

    @property
    def r_min(self) -> float:
        return math.asin(self.c)

    def __call__(self, t):
        """Dense evaluation ``(r, r')`` anywhere in the integrated window."""
        y = self._dense(np.asarray(t, dtype=float))
        return y[0], y[1]

    def first_integral_drift(self) -> float:
        return float(np.max(np.abs(first_integral(self.r, self.r_prime) - self.c)))


def ode_rhs(r, v):
    """Right-hand side ``(r', v')`` of the first-order minimality system."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0) or np.any(r_arr >= math.pi):
        raise DomainError(f"r must lie in (0, pi) (cot r is singular), got {r!r}")
    v = np.asarray(v, dtype=float)
    vdot = (1.0 + v * v) / np.tan(r_arr)
    if np.ndim(vdot) == 0:
        return float(v), float(vdot)
    return v, vdot


def _rhs(t, y):
    r, v = y
    return [v, (1.0 + v * v) * math.cos(r) / math.sin(r)]


def first_integral(r, v):
    """``sin r / sqrt(1 + v^2)``, conserved along solutions."""
    r_arr = np.asarray(r, dtype=float)
    if np.any(r_arr <= 0.0) or np.any(r_arr >= math.pi):
        raise DomainError("r must lie in (0, pi)")
    out = np.sin(r_arr) / np.hypot(1.0, v)
    return float(out) if np.ndim(out) == 0 else out


def closed_form_jet(c, t):
    """``(r, r', r'')`` of the elliptic solution at ``t`` (scalar or array).

    The second derivative is differentiated from the Jacobi identities, not
    taken from the ODE, so it can be used to check the ODE.
    """
    pc = _as_constant(c)
    cc, k = pc.c, pc.k
    sn, cn, dn = jacobi_sn_cn_dn(np.asarray(t, dtype=float) / cc, k_prime=cc)
    r = np.arctan2(cc, k * cn)
    r_prime = k * sn / dn
    r_second = (k / cc) * cn / (dn * dn)
    if np.ndim(t) == 0:
        return float(r), float(r_prime), float(r_second)
    return r, r_prime, r_second


def closed_form_profile(c, t):
    """``(r, r')`` of the elliptic solution with turning point at ``t = 0``."""
    r, r_prime, _ = closed_form_jet(c, t)
    return r, r_prime


def _turning_point_event(t, y):
    return y[1]


def integrate_profile(c, t_end: float = TWO_PI, tol: float | None = None,
                      n_samples: int = 2001) -> ProfileCurve:
    """Integrate the minimality ODE from the turning point ``(arcsin c, 0)``.

    Uses the DOP853 embedded pair with dense output; ``tol`` defaults to
    :func:`default_tol`.  ``c = 1`` is accepted and yields the equatorial
    solution.
    """
    cc = _c_value(c, allow_equator=True)
    if tol is None:
        tol = default_tol(cc)
    if not 1e-13 <= tol <= 1e-6:
        raise InvalidArgumentError(f"tol must lie in [1e-13, 1e-6], got {tol}")
    if not (math.isfinite(t_end) and t_end > 0):
        raise InvalidArgumentError(f"t_end must be positive, got {t_end}")

    y0 = [math.asin(cc), 0.0]
    t_eval = np.linspace(0.0, t_end, n_samples)
    sol = solve_ivp(_rhs, (0.0, t_end), y0, method="DOP853", rtol=tol, atol=0.1 * tol,
                    dense_output=True, t_eval=t_eval, events=_turning_point_event)
    if sol.status < 0:
        raise IntegrationFailure(sol.message, float(sol.t[-1]) if sol.t.size else 0.0)
    r, v = sol.y
    if np.any(r <= 0.0) or np.any(r >= math.pi):
        bad = int(np.argmax((r <= 0.0) | (r >= math.pi)))
        raise IntegrationFailure("profile left (0, pi)", float(sol.t[max(bad - 1, 0)]))

    turns = _strip_initial(sol.t_events[0], t_end)
    period = float(turns[1]) if turns.size >= 2 else math.inf
    return ProfileCurve(cc, sol.t, r, v, period, sol.sol)


def _strip_initial(times, scale):
    # the turning point at t = 0 itself registers as an event
    times = np.asarray(times, dtype=float)
    return times[times > 1e-9 * max(scale, 1.0)]


def measure_period(c, tol: float | None = None) -> float:
    """Period of the profile measured from turning points of r.

    Integrates from the turning point at ``t = 0`` until ``r'`` has changed sign
    twice more (maximum, then minimum); scipy refines each crossing on the dense
    output with Brent's method.  The return value is the time of the second
    crossing, i.e. one full oscillation.
    """
    cc = _c_value(c, allow_equator=True)
    if tol is None:
        tol = default_tol(cc)
    # every nonconstant solution has period < 2 pi
    horizon = 3.0 * math.pi
    sol = solve_ivp(_rhs, (0.0, horizon), [math.asin(cc), 0.0], method="DOP853",
                    rtol=tol, atol=0.1 * tol, events=_turning_point_event)
    if sol.status < 0:
        raise IntegrationFailure(sol.message, float(sol.t[-1]))
    turns = _strip_initial(sol.t_events[0], horizon)
    if turns.size < 2:
        raise NoOscillationError(
            f"r' did not change sign twice within t <= {horizon:.6g} (c={cc})")
    return float(turns[1])
