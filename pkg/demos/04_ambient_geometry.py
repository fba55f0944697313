"""
The ambient space
=================

S^2_+ x S^1 with the product metric dr^2 + sin^2 r dtheta^2 + dt^2.  Its
Ricci curvature is nonnegative and its boundary is totally geodesic, so it
is convex but not strictly so.
"""

import math

import numpy as np

from annuli.ambient import (
    AmbientPoint,
    boundary_second_fundamental_form,
    chart_to_euclidean,
    connection_coeffs,
    ricci_eigenvalues,
)

p = AmbientPoint(math.pi / 3, 1.0, 0.5)
gamma = connection_coeffs(p)
print("Gamma^theta_{r theta} =", gamma[1, 0, 1], " cot r =", 1 / math.tan(p.r))
print("Gamma^r_{theta theta} =", gamma[0, 1, 1])

# Ricci is assembled from differenced Christoffel symbols: expect (1, 1, 0).
print("Ricci eigenvalues:", np.round(ricci_eigenvalues(p), 8))

# The great circle theta in {0, pi} bounds the hemisphere.
for theta in (0.0, math.pi):
    q = AmbientPoint(1.1, theta, 2.0)
    print(f"theta = {theta:.4f}: II =", boundary_second_fundamental_form(q).ravel() + 0.0,
          " y =", chart_to_euclidean(q)[1])
