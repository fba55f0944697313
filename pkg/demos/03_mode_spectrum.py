"""
Quantized modes
===============

The profile closes up over S^1 when n periods fit into 2 pi.  Since the
period is always below 2 pi, n = 1 is impossible and every n >= 2 has
exactly one solution c_n.
"""

import math

from annuli.errors import NoSolutionError
from annuli.spectrum import solve_mode, spectrum

for m in spectrum(8):
    print(f"n = {m.n:2d}  c_n = {m.c:.15f}  r_min = {m.r_min:.6f}  "
          f"n T - 2 pi = {m.n * m.period - 2 * math.pi:+.1e}")

try:
    solve_mode(1)
except NoSolutionError as exc:
    print("n = 1:", exc)

# For small c the period is about 4 c log(4 / c), so c_n log(4 / c_n) ~ pi / (2 n).
m = solve_mode(50)
print("c_50 log(4 / c_50) =", m.c * math.log(4 / m.c), "  pi / 100 =", math.pi / 100)
