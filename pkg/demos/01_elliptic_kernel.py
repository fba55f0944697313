"""
The elliptic kernel
===================

AGM, the complete integral K and the Jacobi functions, checked against each
other.
"""

import math

import numpy as np

from annuli.elliptic import agm, complete_elliptic_k, jacobi_cd, jacobi_sn_cn_dn

# The arithmetic-geometric mean converges quadratically; K(k) = pi / (2 agm(1, k')).
print("agm(1, 0.6)        =", agm(1.0, 0.6))
print("K(0.8)             =", complete_elliptic_k(0.8))
print("pi / (2 agm(1,.6)) =", math.pi / (2 * agm(1.0, 0.6)))

# Close to k = 1 pass the complement instead, so 1 - k^2 is not lost to rounding.
kp = 1e-4
print("K(k' = 1e-4) - log(4/k') =", complete_elliptic_k(k_prime=kp) - math.log(4 / kp))

# sn, cn, dn on a grid: the two Pythagorean identities hold to rounding.
u = np.linspace(-10, 10, 2001)
sn, cn, dn = jacobi_sn_cn_dn(u, 0.7)
print("max |sn^2 + cn^2 - 1|      =", np.max(np.abs(sn**2 + cn**2 - 1)))
print("max |dn^2 + k^2 sn^2 - 1|  =", np.max(np.abs(dn**2 + 0.49 * sn**2 - 1)))

# cd has period 4K and cd(0) = 1.
K = complete_elliptic_k(0.7)
print("cd(0), cd(4K)      =", jacobi_cd(0.0, 0.7), jacobi_cd(4 * K, 0.7))
