"""
Lattice points in a circle
==========================

``floor(pi r^2)`` is only an estimate of the number of lattice points in a
disc. Restricted to the octant ``x >= y > 0`` the count behaves like
``pi R/8 - c sqrt(R)``, and only primes ``2`` and ``4m+1`` show up as norms of
octant points lying exactly on a circle.
"""

import math

from quadres.lattice import count_disc, count_octant, fit_octant_constant, on_circle_count, prime_point_ratio

for r in (2, 5, 10, 100):
    d = count_disc(r)
    print(f"r = {r:3d}: exact {d.exact:6d}  floor(pi r^2) {d.approx:6d}  difference {d.difference}")

fit = fit_octant_constant([10**4, 10**5, 10**6])
print(f"\nfitted c = {fit.c:.5f}  (boundary bookkeeping alone gives 1/2 - 1/(2 sqrt 2) = {0.5 - 0.5 / math.sqrt(2):.5f})")
for R, res in zip(fit.R_values, fit.residuals):
    print(f"  R = {R:8d}: N0 = {count_octant(R):7d}, residual / sqrt(R) = {res:+.5f}")

# Point values of the residual fluctuate with the Gauss circle error term; a
# window average shows the decay more clearly.
for R0 in (10**4, 10**6):
    vals = [(math.pi * R / 8 - fit.c * math.sqrt(R) - count_octant(R)) / math.sqrt(R) for R in range(R0 - 200, R0 + 201)]
    print(f"  RMS residual / sqrt(R) over R0 +- 200, R0 = {R0}: {math.sqrt(sum(v * v for v in vals) / len(vals)):.5f}")

print("\non-circle counts:", {R: on_circle_count(R) for R in (2, 5, 7, 13, 25, 65)})

for R in (10**3, 10**4, 10**5, 10**6):
    r = prime_point_ratio(R)
    print(f"R = {R:8d}: N/N0 = {r.ratio:.5f}, 4/(pi log R) = {r.predicted:.5f}")
