"""Arithmetic-geometric mean, complete elliptic integral K and Jacobi functions.

Everything here runs in double precision.  The Jacobi functions use the
descending Landen / AGM scheme with phase back-substitution (DLMF 22.20(ii)),
which gives uniform accuracy over 0 <= k <= 1 without series switching.

When a modulus is close to 1 pass the complementary modulus explicitly
(``k_prime=...``): forming ``sqrt(1 - k**2)`` from k throws away about half
of the significant digits.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, InvalidArgumentError

__all__ = [
    "EllipticModulus",
    "agm",
    "complete_elliptic_k",
    "jacobi_sn_cn_dn",
    "jacobi_cd",
]

_EPS = np.finfo(float).eps
_LANDEN_STOP = 1e-14
_MAX_ITER = 64


@dataclass(frozen=True)
class EllipticModulus:
    """A modulus k together with its complement k' = sqrt(1 - k^2)."""

    k: float
    k_prime: float

    def __post_init__(self):
        if not (math.isfinite(self.k) and math.isfinite(self.k_prime)):
            raise InvalidArgumentError("modulus must be finite")
        if self.k < 0 or self.k_prime < 0:
            raise InvalidArgumentError(f"modulus components must be >= 0, got {self}")
        if abs(self.k**2 + self.k_prime**2 - 1.0) > 64 * _EPS:
            raise InvalidArgumentError(f"k^2 + k'^2 != 1 for {self}")

    @classmethod
    def from_k(cls, k: float) -> EllipticModulus:
        k = float(k)
        if not math.isfinite(k):
            raise InvalidArgumentError(f"non-finite modulus {k!r}")
        if k < 0:
            raise InvalidArgumentError(f"modulus must be >= 0, got {k}")
        if k > 1:
            raise DomainError(f"modulus must be <= 1, got {k}")
        return cls(k, math.sqrt((1.0 - k) * (1.0 + k)))

    @classmethod
    def from_complement(cls, k_prime: float) -> EllipticModulus:
        kp = float(k_prime)
        if not math.isfinite(kp):
            raise InvalidArgumentError(f"non-finite complementary modulus {kp!r}")
        if not 0 <= kp <= 1:
            raise InvalidArgumentError(f"complementary modulus must lie in [0, 1], got {kp}")
        return cls(math.sqrt((1.0 - kp) * (1.0 + kp)), kp)


def _as_modulus(k, k_prime) -> EllipticModulus:
    if isinstance(k, EllipticModulus):
        return k
    if k_prime is not None:
        m = EllipticModulus.from_complement(k_prime)
        if k is not None and abs(float(k) - m.k) > 64 * _EPS:
            raise InvalidArgumentError(f"k={k} inconsistent with k_prime={k_prime}")
        return m
    if k is None:
        raise InvalidArgumentError("either k or k_prime is required")
    return EllipticModulus.from_k(k)


def agm(a: float, b: float) -> float:
    """Arithmetic-geometric mean of ``a > 0`` and ``b >= 0``.

    Iterates until ``|a_i - b_i| < 4 eps a_i``.
    """
    a = float(a)
    b = float(b)
    if not (math.isfinite(a) and math.isfinite(b)):
        raise InvalidArgumentError(f"agm needs finite arguments, got ({a}, {b})")
    if a <= 0 or b < 0:
        raise InvalidArgumentError(f"agm needs a > 0 and b >= 0, got ({a}, {b})")
    if b == 0.0:
        return 0.0
    for _ in range(_MAX_ITER):
        if abs(a - b) < 4 * _EPS * a:
            break
        a, b = 0.5 * (a + b), math.sqrt(a * b)
    return a


def complete_elliptic_k(k=None, *, k_prime=None) -> float:
    """Complete elliptic integral of the first kind, K(k) = pi / (2 agm(1, k')).

    Raises :class:`DomainError` for k >= 1, where K diverges.
    """
    if k is not None and not isinstance(k, EllipticModulus):
        k = float(k)
        if not math.isfinite(k) or k < 0:
            raise InvalidArgumentError(f"modulus must be finite and >= 0, got {k}")
        if k >= 1:
            raise DomainError(f"K(k) diverges logarithmically at k >= 1 (k={k})")
    m = _as_modulus(k, k_prime)
    if m.k_prime == 0.0 or m.k >= 1.0:
        raise DomainError("K(k) diverges logarithmically at k = 1")
    return math.pi / (2.0 * agm(1.0, m.k_prime))


def jacobi_sn_cn_dn(u, k=None, *, k_prime=None):
    """Jacobi elliptic functions ``(sn, cn, dn)`` of ``u`` for real modulus 0 <= k <= 1.

    ``u`` may be a scalar or an array; results have the same shape.
    """
    m = _as_modulus(k, k_prime)
    u_arr = np.asarray(u, dtype=float)
    if not np.all(np.isfinite(u_arr)):
        raise InvalidArgumentError("jacobi functions need a finite argument")

    if m.k_prime == 0.0:
        sech = 1.0 / np.cosh(u_arr)
        return _unwrap(np.tanh(u_arr), sech, sech.copy(), u)

    # descending AGM sequence: a_n, and c_n = (a_{n-1} - b_{n-1}) / 2
    a, b = 1.0, m.k_prime
    a_seq = [a]
    c_seq = [m.k]
    while abs(c_seq[-1]) >= _LANDEN_STOP and len(a_seq) <= _MAX_ITER:
        a, b, c = 0.5 * (a + b), math.sqrt(a * b), 0.5 * (a - b)
        a_seq.append(a)
        c_seq.append(c)
    n = len(a_seq) - 1

    phi = (2.0**n) * a_seq[n] * u_arr
    for j in range(n, 0, -1):
        phi = 0.5 * (phi + np.arcsin(c_seq[j] / a_seq[j] * np.sin(phi)))

    sn = np.sin(phi)
    cn = np.cos(phi)
    # dn^2 = k'^2 + k^2 cn^2 is a sum of nonnegative terms; the textbook ratio
    # cn / cos(phi_1 - phi_0) is 0/0-conditioned where cn vanishes
    dn = np.sqrt(m.k_prime**2 + (m.k * cn) ** 2)
    return _unwrap(sn, cn, dn, u)


def jacobi_cd(u, k=None, *, k_prime=None):
    """cd(u, k) = cn(u, k) / dn(u, k); a quarter-period shift of sn."""
    m = _as_modulus(k, k_prime)
    if m.k_prime == 0.0:
        raise DomainError("cd is only used for k < 1")
    _, cn, dn = jacobi_sn_cn_dn(u, m)
    return cn / dn


def _unwrap(sn, cn, dn, like):
    if np.ndim(like) == 0:
        return float(sn), float(cn), float(dn)
    return sn, cn, dn
