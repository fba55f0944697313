"""Ambient manifold S^2_+ x S^1 with the product metric.

Coordinates are ``(r, theta, t)`` with ``0 <= r, theta <= pi``; the hemisphere
is ``x = (sin r cos theta, sin r sin theta, cos r)`` (so ``y >= 0``) and its
boundary great circle is ``theta in {0, pi}``.  The metric is

    g = dr^2 + sin^2 r dtheta^2 + dt^2.

Component arrays are indexed in the order (r, theta, t).
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidArgumentError

__all__ = [
    "AmbientPoint",
    "TangentVector",
    "R",
    "THETA",
    "T",
    "metric_at",
    "inner",
    "connection_coeffs",
    "covariant_derivative",
    "riemann_tensor",
    "ricci_tensor",
    "ricci_eigenvalues",
    "boundary_second_fundamental_form",
    "chart_to_euclidean",
]

R, THETA, T = 0, 1, 2
FD_STEP = 1e-5
TWO_PI = 2.0 * math.pi


@dataclass(frozen=True)
class AmbientPoint:
    r: float
    theta: float
    t: float = 0.0

    def __post_init__(self):
        for name in ("r", "theta", "t"):
            if not math.isfinite(getattr(self, name)):
                raise InvalidArgumentError(f"{name} must be finite")
        if not 0.0 <= self.r <= math.pi:
            raise InvalidArgumentError(f"r must lie in [0, pi], got {self.r}")
        if not 0.0 <= self.theta <= math.pi:
            raise InvalidArgumentError(f"theta must lie in [0, pi], got {self.theta}")
        object.__setattr__(self, "t", math.fmod(self.t, TWO_PI) % TWO_PI)

    @property
    def coords(self) -> np.ndarray:
        return np.array([self.r, self.theta, self.t])

    @property
    def on_boundary(self) -> bool:
        return self.theta == 0.0 or self.theta == math.pi


@dataclass(frozen=True)
class TangentVector:
    """Components in the coordinate basis (d/dr, d/dtheta, d/dt) at ``base``."""

    base: AmbientPoint
    components: np.ndarray

    def __post_init__(self):
        comp = np.asarray(self.components, dtype=float).reshape(3)
        object.__setattr__(self, "components", comp)

    def norm2(self) -> float:
        return inner(self.base, self.components, self.components)

    def dot(self, other) -> float:
        return inner(self.base, self.components, _components(other))

    def __mul__(self, s):
        return TangentVector(self.base, s * self.components)

    __rmul__ = __mul__

    def __add__(self, other):
        return TangentVector(self.base, self.components + _components(other))

    def __neg__(self):
        return TangentVector(self.base, -self.components)


def _coords(p) -> np.ndarray:
    if isinstance(p, AmbientPoint):
        return p.coords
    return np.asarray(p, dtype=float).reshape(3)


def _components(v) -> np.ndarray:
    if isinstance(v, TangentVector):
        return v.components
    return np.asarray(v, dtype=float).reshape(3)


def _check_interior(r: float):
    if not 0.0 < r < math.pi:
        raise DomainError(f"coordinate singularity: r must lie in (0, pi), got {r}")


def metric_at(p) -> np.ndarray:
    """Metric components ``diag(1, sin^2 r, 1)``."""
    r = _coords(p)[R]
    return np.diag([1.0, math.sin(r) ** 2, 1.0])


def inner(p, u, v) -> float:
    u = _components(u)
    v = _components(v)
    s2 = math.sin(_coords(p)[R]) ** 2
    return float(u[R] * v[R] + s2 * u[THETA] * v[THETA] + u[T] * v[T])


def connection_coeffs(p) -> np.ndarray:
    """Christoffel symbols ``gamma[i, j, k] = Gamma^i_{jk}`` of the Levi-Civita connection.

    Only ``Gamma^theta_{r theta} = Gamma^theta_{theta r} = cot r`` and
    ``Gamma^r_{theta theta} = -sin r cos r`` are nonzero; the circle factor is flat.
    """
    r = _coords(p)[R]
    _check_interior(r)
    gamma = np.zeros((3, 3, 3))
    cot = math.cos(r) / math.sin(r)
    gamma[THETA, R, THETA] = gamma[THETA, THETA, R] = cot
    gamma[R, THETA, THETA] = -math.sin(r) * math.cos(r)
    return gamma


def _jacobian_fd(field, x: np.ndarray, h: float) -> np.ndarray:
    jac = np.empty((3, 3))
    for j in range(3):
        dx = np.zeros(3)
        dx[j] = h
        jac[:, j] = (np.asarray(field(x + dx)) - np.asarray(field(x - dx))) / (2.0 * h)
    return jac


def covariant_derivative(field, direction, p, jacobian=None, h: float = FD_STEP) -> TangentVector:
    """``nabla_direction field`` at ``p``.

    ``field`` maps a coordinate triple to vector components; it only has to be
    defined on a neighbourhood of ``p`` (any extension of a field given along a
    curve or surface works, since only the derivative along ``direction``
    survives).  ``jacobian``, if given, returns ``d field^i / dx^j``; otherwise
    central differences with step ``h`` are used.
    """
    x = _coords(p)
    d = _components(direction)
    gamma = connection_coeffs(x)
    jac = np.asarray(jacobian(x)) if jacobian is not None else _jacobian_fd(field, x, h)
    value = np.asarray(field(x), dtype=float)
    comp = jac @ d + np.einsum("ijk,j,k->i", gamma, d, value)
    base = p if isinstance(p, AmbientPoint) else _point(x)
    return TangentVector(base, comp)


def _point(x) -> AmbientPoint:
    return AmbientPoint(float(x[R]), float(np.clip(x[THETA], 0.0, math.pi)), float(x[T]))


def riemann_tensor(p, h: float | None = None) -> np.ndarray:
    """``riem[i, j, k, l] = R^i_{jkl}`` from central differences of the connection.

    The r-step defaults to ``1e-5 sin r``; derivatives of ``cot r`` grow like
    ``1 / sin^4 r`` near the poles and a fixed step loses accuracy there.
    """
    x = _coords(p)
    _check_interior(x[R])
    if h is None:
        h = FD_STEP * math.sin(x[R])
    gamma = connection_coeffs(x)
    dgamma = np.empty((3, 3, 3, 3))  # dgamma[m, i, j, k] = d_m Gamma^i_{jk}
    for m in range(3):
        dx = np.zeros(3)
        dx[m] = h
        dgamma[m] = (connection_coeffs(x + dx) - connection_coeffs(x - dx)) / (2.0 * h)
    # R^i_{jkl} = d_k G^i_{lj} - d_l G^i_{kj} + G^i_{km} G^m_{lj} - G^i_{lm} G^m_{kj}
    riem = (np.einsum("kilj->ijkl", dgamma) - np.einsum("likj->ijkl", dgamma)
            + np.einsum("ikm,mlj->ijkl", gamma, gamma)
            - np.einsum("ilm,mkj->ijkl", gamma, gamma))
    return riem


def ricci_tensor(p, h: float | None = None) -> np.ndarray:
    return np.einsum("kjkl->jl", riemann_tensor(p, h))


def ricci_eigenvalues(p, h: float | None = None) -> tuple[float, float, float]:
    """Eigenvalues of the Ricci tensor in an orthonormal frame, descending.

    For the unit-sphere x flat-circle product these are (1, 1, 0).
    """
    x = _coords(p)
    ric = ricci_tensor(x, h)
    frame = np.diag([1.0, 1.0 / math.sin(x[R]), 1.0])
    lam = np.linalg.eigvalsh(frame.T @ ric @ frame)[::-1]
    return tuple(float(v) for v in lam)


def _inward_normal(sign: float):
    def field(x):
        return np.array([0.0, sign / math.sin(x[R]), 0.0])
    return field


def boundary_second_fundamental_form(p, h: float = FD_STEP) -> np.ndarray:
    """Second fundamental form of the boundary at ``p`` in the basis (d/dr, d/dt).

    ``II(X, Y) = -<nabla_X N, Y>`` with N the inward unit normal
    ``+-(1 / sin r) d/dtheta``; positive definite would mean strictly convex.
    """
    if not isinstance(p, AmbientPoint):
        p = _point(_coords(p))
    if not p.on_boundary:
        raise InvalidArgumentError(f"theta must be 0 or pi on the boundary, got {p.theta}")
    _check_interior(p.r)
    field = _inward_normal(1.0 if p.theta == 0.0 else -1.0)
    basis = (np.array([1.0, 0.0, 0.0]), np.array([0.0, 0.0, 1.0]))
    form = np.empty((2, 2))
    for a, xa in enumerate(basis):
        nabla = covariant_derivative(field, xa, p, h=h)
        for b, xb in enumerate(basis):
            form[a, b] = -inner(p, nabla.components, xb)
    return form


def chart_to_euclidean(p):
    """``(x, y, z, w1, w2)``: hemisphere point in R^3 and circle point in R^2.

    Accepts an :class:`AmbientPoint`, a coordinate triple, or an array whose
    last axis has length 3 (vectorised).
    """
    x = p.coords if isinstance(p, AmbientPoint) else np.asarray(p, dtype=float)
    r, theta, t = x[..., R], x[..., THETA], x[..., T]
    sr = np.sin(r)
    # sin(pi) is 1.2e-16 in floating point; the boundary must land on y = 0 exactly
    sin_theta = np.where(theta == math.pi, 0.0, np.sin(theta))
    out = np.stack([sr * np.cos(theta), sr * sin_theta, np.cos(r),
                    np.cos(t), np.sin(t)], axis=-1)
    if out.ndim == 1:
        return tuple(float(v) for v in out)
    return out
