"""
Primes as sums of two squares
=============================

Each prime ``p = 4m+1`` is ``s**2 + t**2`` for exactly one ``s > t > 0``.
Euclidean descent from a square root of -1 finds it in ``O(log p)`` steps;
the naive scan over ``t`` needs up to ``sqrt(p/2)`` candidates.
"""

import math

from quadres.modmath import primes_in_class
from quadres.twosquares import decompose, decompose_brute, uniqueness_check, verify_congruence_form

for p in (5, 13, 29, 97, 10009, 1000033):
    d = decompose(p)
    _, visited = decompose_brute(p)
    print(f"{p} = {d.s}^2 + {d.t}^2   theta = {d.theta:.4f}   scan visited {visited}"
          f"   congruence form holds: {verify_congruence_form(d)}")

# Uniqueness, checked exhaustively.
primes = list(primes_in_class(20_000, 1, 4))
print("\nall unique below 2e4:", all(uniqueness_check(p) == 1 for p in primes))

# The scan's cost depends on where t happens to fall. Worst case relative to
# sqrt(p/2):
worst = max(primes, key=lambda p: decompose_brute(p)[1] / math.sqrt(p / 2))
print("worst relative scan cost below 2e4:", worst, decompose_brute(worst)[1], "of", math.isqrt(worst // 2))
