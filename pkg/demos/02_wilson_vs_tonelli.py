"""
Two ways to a square root of -1
===============================

For a prime ``p = 4m+1`` both ``((p-1)/2)! mod p`` and the Tonelli-Shanks
algorithm produce ``x`` with ``x**2 = -1 (mod p)``. They land on the same pair
``{x, p - x}`` but at very different cost: ``(p-1)/2 - 1`` multiplications
against a few hundred.
"""

from quadres.experiments import bench_sqrt_methods, grid_decades
from quadres.modmath import sqrt_mod_prime, wilson_sqrt_minus_one

for p in (5, 13, 17, 29, 97):
    w = wilson_sqrt_minus_one(p)
    print(f"p={p:3d}  half factorial {w:3d}  Tonelli-Shanks pair {sqrt_mod_prime(p - 1, p)}")

# Scaling: primes 4m+1 just above 10^4 .. 10^7. The factorial's operation
# count grows like p (slope 1 on log-log axes); Tonelli-Shanks stays
# essentially flat.
result = bench_sqrt_methods(grid_decades(4, 7), reps=5)
print(f"\n{'method':24s} {'p':>10s} {'op_count':>10s} {'median ns':>12s}")
for s in result.samples:
    print(f"{s.op_label:24s} {s.input_magnitude:10d} {s.op_count:10d} {s.wall_time_ns:12d}")
print()
for label, slope in result.op_slopes.items():
    print(f"{label:24s} op-count slope {slope:6.3f}   time slope {result.time_slopes[label]:6.3f}")
