"""The annulus ``f(theta, t) = (x(r(t), theta), t)`` and its verification.

A surface is described by its profile jet ``t -> (r, r', r'')``.  Solved modes
use the elliptic closed form; the equator and arbitrary (non-minimal) control
profiles are supported so that every check can also be run on a surface where
it is expected to fail.

Frame, for ``w = sqrt(1 + r'^2)``::

    e1 = (1 / sin r) d/dtheta
    e2 = (r' d/dr + d/dt) / w
    n  = (d/dr - r' d/dt) / w
    nu = -e1 at theta = 0,  +e1 at theta = pi   (outward conormal)

Principal curvatures ``kappa1 = cot r / w`` and ``kappa2 = -r'' / w^3``.
"""

from __future__ import annotations

import math
from concurrent.futures import ThreadPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable

import numpy as np

from .ambient import FD_STEP, AmbientPoint, TangentVector, covariant_derivative
from .errors import (
    DegenerateSurfaceError,
    DomainError,
    InvalidArgumentError,
    InvalidPerturbationError,
)
from .profile import ProfileCurve, closed_form_jet, integrate_profile
from .spectrum import DEFAULT_ROOT_TOL, ModeSolution, solve_mode

__all__ = [
    "AnnulusSurface",
    "SurfaceFrame",
    "CurvatureSample",
    "ReportRow",
    "frame_at",
    "shape_operator",
    "principal_curvatures",
    "mean_curvature",
    "mean_curvature_residual",
    "sup_second_fundamental_form",
    "sampled_sup_second_fundamental_form",
    "free_boundary_check",
    "area",
    "converged_nodes",
    "area_first_integral_form",
    "first_variation_check",
    "report_row",
    "noncompactness_report",
]

TWO_PI = 2.0 * math.pi
NODES_PER_PERIOD = 64
MAX_NODES_PER_PERIOD = 1024
QUADRATURE_RTOL = 1e-10

Jet = Callable[[np.ndarray], tuple]


@dataclass(frozen=True)
class AnnulusSurface:
    """Immutable description of one annulus.

    ``c`` is the first integral when the profile is a solution (1 for the
    equator) and ``None`` for control profiles.  ``oscillations`` is the
    number of profile periods in ``[0, 2 pi]``.
    """

    jet: Jet
    oscillations: int = 1
    c: float | None = None
    mode: ModeSolution | None = None
    profile: ProfileCurve | None = field(default=None, repr=False)
    label: str = ""

    @classmethod
    def from_mode(cls, mode, ode_tol: float | None = None, root_tol: float = DEFAULT_ROOT_TOL,
                  integrate: bool = True) -> AnnulusSurface:
        """Annulus of mode ``n`` (an int or a solved :class:`ModeSolution`)."""
        if not isinstance(mode, ModeSolution):
            mode = solve_mode(mode, root_tol)
        c = mode.c_n
        profile = integrate_profile(c, TWO_PI, ode_tol) if integrate else None
        return cls(lambda t: closed_form_jet(c, t), mode.n, c.c, mode, profile,
                   f"mode {mode.n}")

    @classmethod
    def equator(cls) -> AnnulusSurface:
        """The totally geodesic annulus ``r = pi / 2``."""
        def jet(t):
            t = np.asarray(t, dtype=float)
            return np.full_like(t, 0.5 * math.pi), np.zeros_like(t), np.zeros_like(t)
        return cls(jet, 1, 1.0, None, None, "equator")

    @classmethod
    def from_profile(cls, r, r_prime, r_second, oscillations: int = 1,
                     label: str = "control") -> AnnulusSurface:
        """Surface over an arbitrary 2 pi-periodic profile given with its derivatives."""
        def jet(t):
            t = np.asarray(t, dtype=float)
            return (np.asarray(r(t), dtype=float) + 0 * t,
                    np.asarray(r_prime(t), dtype=float) + 0 * t,
                    np.asarray(r_second(t), dtype=float) + 0 * t)
        return cls(jet, oscillations, None, None, None, label)

    def evaluate(self, t):
        """``(r, r', r'')`` at scalar or array ``t``."""
        r, rp, rpp = self.jet(t)
        if np.ndim(t) == 0:
            return float(r), float(rp), float(rpp)
        return r, rp, rpp

    def point(self, theta: float, t: float) -> AmbientPoint:
        r, _, _ = self.evaluate(t)
        return AmbientPoint(r, theta, t)


@dataclass(frozen=True)
class SurfaceFrame:
    base: AmbientPoint
    e1: TangentVector
    e2: TangentVector
    normal: TangentVector
    conormal: TangentVector | None

    def gram(self) -> np.ndarray:
        vecs = (self.e1, self.e2, self.normal)
        return np.array([[u.dot(v) for v in vecs] for u in vecs])


@dataclass(frozen=True)
class CurvatureSample:
    """Principal curvatures at one point.

    ``kappa1_nabla`` and ``kappa2_nabla`` (when present) come from covariant
    differentiation of the normal rather than the closed formulas.
    """

    kappa1: float
    kappa2: float
    kappa1_nabla: float = math.nan
    kappa2_nabla: float = math.nan
    off_diagonal: float = math.nan

    @property
    def H(self) -> float:
        return 0.5 * (self.kappa1 + self.kappa2)

    @property
    def A_norm_sq(self) -> float:
        return self.kappa1**2 + self.kappa2**2

    @property
    def route_gap(self) -> float:
        return max(abs(self.kappa1 - self.kappa1_nabla), abs(self.kappa2 - self.kappa2_nabla))


def _check_r(r):
    if np.any(np.asarray(r) <= 0.0) or np.any(np.asarray(r) >= math.pi):
        raise DegenerateSurfaceError("profile value r left (0, pi); the annulus degenerates")


def _normal_components(r_prime):
    w = math.hypot(1.0, r_prime)
    return np.array([1.0 / w, 0.0, -r_prime / w])


def frame_at(s: AnnulusSurface, theta: float, t: float) -> SurfaceFrame:
    if not 0.0 <= theta <= math.pi:
        raise InvalidArgumentError(f"theta must lie in [0, pi], got {theta}")
    r, rp, _ = s.evaluate(t)
    _check_r(r)
    p = AmbientPoint(r, theta, t)
    w = math.hypot(1.0, rp)
    e1 = TangentVector(p, [0.0, 1.0 / math.sin(r), 0.0])
    e2 = TangentVector(p, [rp / w, 0.0, 1.0 / w])
    normal = TangentVector(p, _normal_components(rp))
    conormal = None
    if theta == 0.0:
        conormal = -e1
    elif theta == math.pi:
        conormal = e1
    return SurfaceFrame(p, e1, e2, normal, conormal)


def principal_curvatures(r, r_prime, r_second):
    """Closed-form ``(kappa1, kappa2)``; vectorised."""
    r = np.asarray(r, dtype=float)
    w2 = 1.0 + np.asarray(r_prime, dtype=float) ** 2
    kappa1 = (np.cos(r) / np.sin(r)) / np.sqrt(w2)
    kappa2 = -np.asarray(r_second, dtype=float) / (w2 * np.sqrt(w2))
    return kappa1, kappa2


def shape_operator(s: AnnulusSurface, theta: float, t: float, h: float = FD_STEP) -> CurvatureSample:
    """Principal curvatures by both the closed formulas and ``<nabla_{e_i} n, e_j>``.

    The normal is extended off the surface as a function of ``t`` alone; the
    covariant derivative only sees its derivative along tangent directions.
    A fourth-order stencil keeps high modes (|A| in the hundreds) well inside
    the 1e-6 agreement band at the default step.
    """
    frame = frame_at(s, theta, t)
    r, rp, rpp = s.evaluate(t)
    k1, k2 = principal_curvatures(r, rp, rpp)

    cache = {}

    def normal_field(x):
        # the stencil revisits t-h, t, t+h several times
        tt = float(x[2])
        if tt not in cache:
            cache[tt] = _normal_components(s.evaluate(tt)[1])
        return cache[tt]

    def jacobian(x):
        # the extension is constant in r and theta; fourth-order stencil in t
        tt = float(x[2])
        jac = np.zeros((3, 3))
        jac[:, 2] = (8.0 * (normal_field([0, 0, tt + h]) - normal_field([0, 0, tt - h]))
                     - (normal_field([0, 0, tt + 2 * h]) - normal_field([0, 0, tt - 2 * h]))) / (12.0 * h)
        return jac

    p = frame.base
    d1 = covariant_derivative(normal_field, frame.e1, p, jacobian=jacobian)
    d2 = covariant_derivative(normal_field, frame.e2, p, jacobian=jacobian)
    return CurvatureSample(float(k1), float(k2),
                           kappa1_nabla=d1.dot(frame.e1),
                           kappa2_nabla=d2.dot(frame.e2),
                           off_diagonal=max(abs(d1.dot(frame.e2)), abs(d2.dot(frame.e1))))


def mean_curvature(r, r_prime, r_second):
    """``H = (cot r - r'' / (1 + r'^2)) / (2 sqrt(1 + r'^2))``; vectorised."""
    r_arr = np.asarray(r, dtype=float)
    _check_domain(r_arr)
    w2 = 1.0 + np.asarray(r_prime, dtype=float) ** 2
    H = (np.cos(r_arr) / np.sin(r_arr) - np.asarray(r_second) / w2) / (2.0 * np.sqrt(w2))
    return float(H) if np.ndim(H) == 0 else H


def _check_domain(r):
    if np.any(r <= 0.0) or np.any(r >= math.pi):
        raise DomainError("r must lie in (0, pi)")


def _sample_times(n_samples: int) -> np.ndarray:
    return np.linspace(0.0, TWO_PI, int(n_samples), endpoint=False)


def mean_curvature_residual(s: AnnulusSurface, n_samples: int = 100_000) -> float:
    """``sup |H|`` over ``n_samples`` equispaced values of t.

    Curvatures do not depend on theta (rotational symmetry), so a t-sample
    covers a whole circle of surface points.
    """
    r, rp, rpp = s.evaluate(_sample_times(n_samples))
    return float(np.max(np.abs(mean_curvature(r, rp, rpp))))


def sup_second_fundamental_form(c) -> float:
    """Closed form ``sup |A| = sqrt(2) sqrt(1 - c^2) / c`` for a minimal profile.

    On a minimal profile ``kappa2 = -kappa1`` and ``kappa1 = c cos r / sin^2 r``,
    largest at ``r = arcsin c``.
    """
    c = getattr(c, "c", c)
    c = float(c)
    if not (math.isfinite(c) and 0.0 < c < 1.0):
        raise InvalidArgumentError(f"c must lie in (0, 1), got {c!r}")
    return math.sqrt(2.0) * math.sqrt((1.0 - c) * (1.0 + c)) / c


def sampled_sup_second_fundamental_form(s: AnnulusSurface, samples_per_period: int = 1000) -> float:
    t = _sample_times(samples_per_period * s.oscillations)
    k1, k2 = principal_curvatures(*s.evaluate(t))
    return float(np.sqrt(np.max(k1 * k1 + k2 * k2)))


def free_boundary_check(s: AnnulusSurface, t) -> tuple[float, float]:
    """Largest ``|<nu, d/dr>|`` and ``|<nu, d/dt>|`` over both boundary circles at ``t``.

    Holds for any profile: nu is proportional to d/dtheta, which is
    g-orthogonal to d/dr and d/dt.
    """
    dev_r = dev_t = 0.0
    for tt in np.atleast_1d(np.asarray(t, dtype=float)):
        for theta in (0.0, math.pi):
            frame = frame_at(s, theta, float(tt))
            nu = frame.conormal
            dev_r = max(dev_r, abs(nu.dot([1.0, 0.0, 0.0])))
            dev_t = max(dev_t, abs(nu.dot([0.0, 0.0, 1.0])))
    return dev_r, dev_t


def _gauss_legendre_nodes(panels: int, nodes_per_panel: int = NODES_PER_PERIOD):
    x, w = np.polynomial.legendre.leggauss(nodes_per_panel)
    edges = np.linspace(0.0, TWO_PI, panels + 1)
    half = 0.5 * np.diff(edges)
    mid = 0.5 * (edges[:-1] + edges[1:])
    t = (mid[:, None] + half[:, None] * x[None, :]).ravel()
    weights = (half[:, None] * w[None, :]).ravel()
    return t, weights


def _area_functional(r, r_prime, weights) -> float:
    return math.pi * float(np.sum(weights * np.sin(r) * np.hypot(1.0, r_prime)))


def _area_at(s: AnnulusSurface, nodes_per_period: int) -> float:
    t, w = _gauss_legendre_nodes(s.oscillations, nodes_per_period)
    r, rp, _ = s.evaluate(t)
    return _area_functional(r, rp, w)


def converged_nodes(s: AnnulusSurface, rtol: float = QUADRATURE_RTOL) -> int:
    """Nodes per period at which the area stops changing to ``rtol``.

    64 suffice for moderate modes; as c -> 0 the profile develops features of
    width ~c in t and the rule is doubled until successive areas agree.
    """
    nodes = NODES_PER_PERIOD
    prev = _area_at(s, nodes)
    while nodes < MAX_NODES_PER_PERIOD:
        cur = _area_at(s, 2 * nodes)
        if abs(cur - prev) <= rtol * abs(cur):
            break
        nodes, prev = 2 * nodes, cur
    return nodes


def area(s: AnnulusSurface, nodes_per_period: int | None = None) -> float:
    """``pi * int_0^{2 pi} sin r sqrt(1 + r'^2) dt``, composite Gauss-Legendre.

    The induced metric is ``sin^2 r dtheta^2 + (1 + r'^2) dt^2`` and theta
    spans an interval of length pi.  One panel per profile period.
    """
    if nodes_per_period is None:
        nodes_per_period = converged_nodes(s)
    return _area_at(s, nodes_per_period)


def area_first_integral_form(s: AnnulusSurface, nodes_per_period: int | None = None) -> float:
    """Same area via ``sqrt(1 + r'^2) = sin r / c``; only valid on solutions."""
    if s.c is None:
        raise InvalidArgumentError("first-integral area form needs a minimal profile")
    if nodes_per_period is None:
        nodes_per_period = converged_nodes(s)
    t, w = _gauss_legendre_nodes(s.oscillations, nodes_per_period)
    r, _, _ = s.evaluate(t)
    return math.pi * float(np.sum(w * np.sin(r) ** 2)) / s.c


def first_variation_check(s: AnnulusSurface, bump, eps: float = 1e-4, bump_prime=None,
                          nodes_per_period: int | None = None) -> float:
    """Central difference ``(A(r + eps b) - A(r - eps b)) / (2 eps)``.

    ``bump`` must be 2 pi-periodic; its derivative is differenced numerically
    unless ``bump_prime`` is supplied.
    """
    if nodes_per_period is None:
        nodes_per_period = converged_nodes(s)
    panels = max(s.oscillations, 4)
    t, w = _gauss_legendre_nodes(panels, nodes_per_period)
    r, rp, _ = s.evaluate(t)
    b = np.asarray(bump(t), dtype=float) + 0 * t
    if bump_prime is None:
        hb = 1e-6
        db = (np.asarray(bump(t + hb)) - np.asarray(bump(t - hb))) / (2.0 * hb)
    else:
        db = np.asarray(bump_prime(t), dtype=float) + 0 * t

    check_t = _sample_times(4096)
    r_check = s.evaluate(check_t)[0]
    b_check = np.asarray(bump(check_t), dtype=float) + 0 * check_t
    lo = min(np.min(r - eps * np.abs(b)), np.min(r_check - eps * np.abs(b_check)))
    hi = max(np.max(r + eps * np.abs(b)), np.max(r_check + eps * np.abs(b_check)))
    if lo <= 0.0 or hi >= math.pi:
        raise InvalidPerturbationError("perturbed profile leaves (0, pi)")

    plus = _area_functional(r + eps * b, rp + eps * db, w)
    minus = _area_functional(r - eps * b, rp - eps * db, w)
    return (plus - minus) / (2.0 * eps)


@dataclass(frozen=True)
class ReportRow:
    n: int
    c_n: float
    r_min: float
    period: float
    sup_A: float
    area: float
    H_residual: float
    fb_residual: float

    @property
    def sequence_index(self) -> int:
        """Position in the decreasing sequence of initial values r(0), from 1."""
        return self.n - 1

    def as_dict(self) -> dict:
        return asdict(self)


def report_row(mode: ModeSolution, samples_per_period: int = 1000) -> ReportRow:
    """Closed-form quantities and per-surface residuals for one mode."""
    s = AnnulusSurface.from_mode(mode, integrate=False)
    t = _sample_times(samples_per_period * mode.n)
    fb = free_boundary_check(s, t[:: max(1, t.size // 64)])
    return ReportRow(
        n=mode.n,
        c_n=mode.c,
        r_min=mode.r_min,
        period=mode.period,
        sup_A=sup_second_fundamental_form(mode.c_n),
        area=area(s),
        H_residual=mean_curvature_residual(s, t.size),
        fb_residual=max(fb),
    )


def noncompactness_report(n_max: int, samples_per_period: int = 1000,
                          root_tol: float = DEFAULT_ROOT_TOL,
                          workers: int | None = None) -> list[ReportRow]:
    """One row per mode n = 2..n_max.

    Along the family c_n -> 0, r_min -> 0 and sup |A| grows without bound, so
    no subsequence can converge smoothly.
    """
    if int(n_max) != n_max or n_max < 2:
        raise InvalidArgumentError(f"n_max must be an integer >= 2, got {n_max!r}")
    modes = [solve_mode(n, root_tol) for n in range(2, int(n_max) + 1)]
    if workers and workers > 1:
        with ThreadPoolExecutor(max_workers=workers) as pool:
            return list(pool.map(lambda m: report_row(m, samples_per_period), modes))
    return [report_row(m, samples_per_period) for m in modes]
