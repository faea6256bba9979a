"""
Uniformity tests
================

Chi-square and Kolmogorov-Smirnov tests on the two-square angles, on
``s / sqrt(p)``, on normalised roots of -1 and on Gaussian-prime arguments.
``s / sqrt(p)`` is ``cos(theta)``: with uniform angles it is *not* uniform on
a linear scale, and its reports reject accordingly.
"""

from quadres.experiments import bench_search_cost, loglog_slope, random_satisfiable_instances, randomness_suite
from quadres.experiments.bench import nearest_prime_4m1

for r in randomness_suite(10**6):
    print(f"{r.test_name:22s} n={r.sample_size:6d}  stat={r.statistic:12.6g}  p={r.p_value:.4g}")

# Exhaustive search cost on satisfiable prime instances grows linearly with
# the modulus.
bs = [nearest_prime_4m1(10**k) for k in (3, 4, 5)]
means = []
for b in bs:
    samples = bench_search_cost(random_satisfiable_instances(b, 300, seed=b))
    means.append(sum(s.op_count for s in samples) / len(samples))
    print(f"b = {b:6d}: mean visited {means[-1]:.1f}  ({means[-1] / b:.3f} b)")
print("log-log slope:", round(loglog_slope(bs, means), 3))
