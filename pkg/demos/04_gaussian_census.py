"""
Gaussian primes by norm and by angle
====================================

First-quadrant Gaussian primes of norm at most ``x`` number about
``x / log x``, and their arguments spread evenly over ``[0, pi/2)``.
"""

import math

from quadres.experiments import chi_square_counts
from quadres.gausscensus import census_formula, count_pi_zi, enumerate_gaussian_primes, sector_count, sector_expected, sector_histogram

print("norm <= 25:", [str(g) for g in enumerate_gaussian_primes(25)])

for x in (10**2, 10**4, 10**6):
    n, ratio = count_pi_zi(x)
    print(f"x = {x:>8d}: count {n:6d} (formula {census_formula(x):6d}), count log x / x = {ratio:.4f}")

x = 10**6
hist = sector_histogram(x, 16)
print("\n16-sector histogram at x = 1e6")
for lo, hi, count, expected in hist.rows():
    bar = "#" * round(40 * count / max(hist.counts))
    print(f"[{lo:.3f}, {hi:.3f})  {count:5d}  {expected:8.1f}  {bar}")
print("chi-square:", chi_square_counts(hist.counts, hist.expected()))

# The equidistribution prediction for a single sector, with the width taken
# as theta2 - theta1.
t1, t2 = 0.2, 0.5
print(f"\nsector [{t1}, {t2}]: observed {sector_count(x, t1, t2)}, predicted {sector_expected(x, t1, t2):.0f}")
