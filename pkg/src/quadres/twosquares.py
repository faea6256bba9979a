"""Two-square decomposition of primes ``p = 4m+1``.

Every such prime is ``s**2 + t**2`` for exactly one pair ``s > t > 0``. Two
ways to find it live here: Euclidean descent from a square root of -1
(polynomial in ``log p``) and the plain scan over ``t``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Optional

from .modmath import DomainError, OpCounter, is_prime, require_prime_4m1, sqrt_mod_prime

__all__ = [
    "TwoSquareDecomposition",
    "decompose",
    "decompose_brute",
    "verify_congruence_form",
    "uniqueness_check",
]


@dataclass(frozen=True)
class TwoSquareDecomposition:
    """``p = s**2 + t**2``; instances are not validated on construction so that
    corrupted records can be fed to the checkers."""

    p: int
    s: int
    t: int

    @property
    def theta(self) -> float:
        """Polar angle of ``s + t i``, in ``(0, pi/4)`` for a valid record."""
        return math.atan2(self.t, self.s)

    def is_valid(self) -> bool:
        return self.s * self.s + self.t * self.t == self.p and self.s > self.t > 0


def decompose(p: int, counter: Optional[OpCounter] = None) -> TwoSquareDecomposition:
    """Hermite-Serret descent.

    Take ``z`` with ``z**2 == -1 (mod p)`` and run the Euclidean algorithm on
    ``(p, z)``; the first two remainders below ``sqrt(p)`` are ``s`` and ``t``.

    >>> decompose(97)
    TwoSquareDecomposition(p=97, s=9, t=4)
    """
    require_prime_4m1(p)
    roots = sqrt_mod_prime(p - 1, p, counter)
    assert roots is not None  # -1 is a residue for p = 4m+1
    a, b = p, roots[0]
    steps = 0
    while b * b > p:
        a, b = b, a % b
        steps += 2
    s, t = b, a % b
    if counter is not None:
        counter.add(steps + 2)
    d = TwoSquareDecomposition(p, s, t)
    if not d.is_valid():  # pragma: no cover - would mean a broken root finder
        raise ArithmeticError(f"descent failed for p={p}: got ({s}, {t})")
    return d


def decompose_brute(p: int) -> tuple[TwoSquareDecomposition, int]:
    """Scan ``t = 1, 2, ...`` until ``p - t**2`` is a perfect square.

    Returns the decomposition and the number of ``t`` values tested.
    """
    require_prime_4m1(p)
    t = 1
    while 2 * t * t < p:
        rest = p - t * t
        s = math.isqrt(rest)
        if s * s == rest:
            return TwoSquareDecomposition(p, s, t), t
        t += 1
    raise ArithmeticError(f"no decomposition found for prime {p}")  # pragma: no cover


def verify_congruence_form(d: TwoSquareDecomposition) -> bool:
    """Check ``s**2 == p - t**2 (mod p)``, the residue-problem form of the
    decomposition (``x = s``, ``a = p - t**2``, ``b = p``)."""
    if d.p < 1:
        return False
    return d.s * d.s % d.p == (d.p - d.t * d.t) % d.p


def uniqueness_check(p: int) -> int:
    """Count all pairs ``s > t > 0`` with ``s**2 + t**2 == p`` by enumeration.

    Only primes ``p = 4m+1`` are accepted; composites such as 25 have several
    representations and are rejected.
    """
    if p % 4 != 1:
        raise DomainError(f"{p} is not congruent to 1 mod 4")
    if not is_prime(p):
        raise DomainError(f"{p} is composite")
    count = 0
    for t in range(1, math.isqrt(p // 2) + 1):
        rest = p - t * t
        s = math.isqrt(rest)
        if s * s == rest and s > t:
            count += 1
    return count
