"""
The quadratic congruence problem
================================

Is there a positive ``x < c`` with ``x**2 = a (mod b)``?  Checking a proposed
``x`` is one multiplication; finding one is the hard part. This script puts
the verifier, the fast decision path and the exhaustive scan side by side.
"""

from quadres.quadcong import QCInstance, brute_force, decide, solve_wilson_instance, verify_certificate

# A few instances. ``a`` is reduced mod ``b`` on construction.
instances = [QCInstance(4, 5, 3), QCInstance(2, 5, 5), QCInstance(7, 9, 5), QCInstance(12, 13, 13)]

for inst in instances:
    verdict = decide(inst)
    scan, visited = brute_force(inst)
    print(f"{inst}: decide -> {verdict}, scan -> {scan} after {visited} candidates")
    if verdict.satisfiable:
        assert verify_certificate(inst, verdict.witness)

# For prime moduli ``decide`` does not scan: it computes both square roots
# with Tonelli-Shanks and keeps the smaller one if it lies below ``c``.
p = 1_000_000_009  # prime
inst = QCInstance(p - 1, p, p)
print("x^2 = -1 mod", p, "->", decide(inst))  # p = 1 mod 4, so a root exists

# The special instance a = p - 1 is also solved by the half factorial
# ((p-1)/2)! mod p, at linear cost in p.
print("half-factorial witness for p = 10009:", solve_wilson_instance(10009))
