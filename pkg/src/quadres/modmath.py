"""Modular arithmetic, primality and prime streams.

Everything here works on plain Python ints (arbitrary precision). The few
functions whose cost is studied by :mod:`quadres.experiments.bench` accept an
optional :class:`OpCounter` and add the number of modular multiplications they
perform to it.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterator, Optional

import numpy as np

__all__ = [
    "DomainError",
    "OpCounter",
    "mod_pow",
    "is_prime",
    "sieve",
    "primes_in_class",
    "factorial_mod",
    "wilson_sqrt_minus_one",
    "legendre_symbol",
    "sqrt_mod_prime",
    "require_prime_4m1",
    "set_primality_seed",
]


class DomainError(ValueError):
    """An argument lies outside the mathematical domain of an operation."""


@dataclass
class OpCounter:
    """Tally of modular multiplications (squarings included)."""

    mults: int = 0

    def add(self, k: int) -> None:
        self.mults += k


def _pow_cost(exp: int) -> int:
    # square-and-multiply: one squaring per bit after the leading one,
    # one extra multiplication per further set bit
    if exp <= 0:
        return 0
    return exp.bit_length() - 1 + bin(exp).count("1") - 1


def mod_pow(base: int, exp: int, modulus: int, counter: Optional[OpCounter] = None) -> int:
    """Return ``base**exp % modulus`` by binary exponentiation."""
    if modulus < 1:
        raise DomainError(f"modulus must be >= 1, got {modulus}")
    if exp < 0:
        raise DomainError(f"exponent must be >= 0, got {exp}")
    if counter is not None:
        counter.add(_pow_cost(exp))
    return pow(base, exp, modulus)


# Deterministic for every n < 3.3e24 (Sorenson & Webster), so in particular
# for all 64-bit inputs.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37)
_MR_DETERMINISTIC_LIMIT = 1 << 64
_MR_RANDOM_ROUNDS = 64
_mr_seed: Optional[int] = None


def set_primality_seed(seed: Optional[int]) -> None:
    """Fix the random bases used above 2**64 for every later :func:`is_prime` call."""
    global _mr_seed
    _mr_seed = seed


def _mr_round(n: int, d: int, r: int, a: int) -> bool:
    x = pow(a, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(r - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int, seed: Optional[int] = None) -> bool:
    """Miller-Rabin primality test.

    Deterministic below 2**64. Above that, 64 rounds with random bases are
    used (error probability below 4**-64). The bases come from ``seed``, else
    the seed set by :func:`set_primality_seed`, else ``n`` itself, so results
    are reproducible either way.
    """
    if n < 2:
        return False
    for q in _MR_BASES:
        if n % q == 0:
            return n == q
    d, r = n - 1, 0
    while d % 2 == 0:
        d //= 2
        r += 1
    if n < _MR_DETERMINISTIC_LIMIT:
        return all(_mr_round(n, d, r, a) for a in _MR_BASES)
    if seed is None:
        seed = n if _mr_seed is None else _mr_seed
    rng = random.Random(seed)
    return all(_mr_round(n, d, r, rng.randrange(2, n - 1)) for _ in range(_MR_RANDOM_ROUNDS))


def sieve(limit: int) -> np.ndarray:
    """All primes ``<= limit`` as an int64 array (sieve of Eratosthenes)."""
    if limit < 2:
        return np.array([], dtype=np.int64)
    flags = np.ones(limit + 1, dtype=bool)
    flags[:2] = False
    flags[4::2] = False
    for p in range(3, math.isqrt(limit) + 1, 2):
        if flags[p]:
            flags[p * p :: 2 * p] = False
    return np.flatnonzero(flags).astype(np.int64)


_SEGMENT = 1 << 20


def primes_in_class(limit: int, residue: int, modulus: int) -> Iterator[int]:
    """Yield the primes ``p <= limit`` with ``p % modulus == residue``, ascending.

    A segmented sieve keeps memory at O(sqrt(limit) + segment) regardless of
    ``limit``.
    """
    if modulus < 1:
        raise DomainError(f"modulus must be >= 1, got {modulus}")
    if not 0 <= residue < modulus:
        raise DomainError(f"residue must lie in [0, {modulus}), got {residue}")
    if limit < 2:
        return
    base = sieve(math.isqrt(limit))
    lo = 2
    while lo <= limit:
        hi = min(lo + _SEGMENT, limit + 1)
        flags = np.ones(hi - lo, dtype=bool)
        for p in base.tolist():
            if p * p >= hi:
                break
            start = max(p * p, -(-lo // p) * p)
            flags[start - lo :: p] = False
        seg = np.flatnonzero(flags) + lo
        if modulus > 1:
            seg = seg[seg % modulus == residue]
        yield from seg.tolist()
        lo = hi


def factorial_mod(n: int, modulus: int, counter: Optional[OpCounter] = None) -> int:
    """``n! % modulus`` by plain sequential multiplication.

    No reflection or product-tree shortcuts: the product 2*3*...*n is formed
    one factor at a time, costing ``max(n - 1, 0)`` multiplications.
    """
    if modulus < 1:
        raise DomainError(f"modulus must be >= 1, got {modulus}")
    if n < 0:
        raise DomainError(f"n must be >= 0, got {n}")
    acc = 1 % modulus
    for k in range(2, n + 1):
        acc = acc * k % modulus
    if counter is not None:
        counter.add(max(n - 1, 0))
    return acc


def require_prime_4m1(p: int) -> None:
    if p % 4 != 1:
        raise DomainError(f"{p} is not congruent to 1 mod 4")
    if not is_prime(p):
        raise DomainError(f"{p} is not prime")


def wilson_sqrt_minus_one(p: int, counter: Optional[OpCounter] = None) -> int:
    """Square root of -1 modulo a prime ``p = 4m+1`` via ``((p-1)/2)! mod p``.

    The half factorial is returned as computed; which of the two roots it
    lands on depends on ``p`` (see :func:`sqrt_mod_prime` for the ordered pair).
    """
    require_prime_4m1(p)
    return factorial_mod((p - 1) // 2, p, counter)


def legendre_symbol(a: int, p: int) -> int:
    """Legendre symbol (a/p) for an odd prime p, by Euler's criterion."""
    if p == 2:
        raise DomainError("Legendre symbol is undefined for p = 2")
    if p < 2 or p % 2 == 0:
        raise DomainError(f"p must be an odd prime, got {p}")
    ls = mod_pow(a, (p - 1) // 2, p)
    return -1 if ls == p - 1 else ls


def sqrt_mod_prime(
    a: int, p: int, counter: Optional[OpCounter] = None
) -> Optional[tuple[int, int]]:
    """Square roots of ``a`` modulo the prime ``p`` (Tonelli-Shanks).

    Returns:
        ``(x, p - x)`` with ``x <= p - x`` if ``a`` is a nonzero quadratic
        residue, else ``None``. ``a == 0 (mod p)`` also gives ``None``, so the
        result is non-empty exactly when the Legendre symbol is 1.
    """
    a %= p
    if a == 0:
        return None
    if p == 2:
        return (1, 1)
    if mod_pow(a, (p - 1) // 2, p, counter) != 1:
        return None

    if p % 4 == 3:
        x = mod_pow(a, (p + 1) // 4, p, counter)
        return (min(x, p - x), max(x, p - x))

    q, s = p - 1, 0
    while q % 2 == 0:
        q //= 2
        s += 1
    z = 2
    while mod_pow(z, (p - 1) // 2, p, counter) != p - 1:
        z += 1

    m = s
    c = mod_pow(z, q, p, counter)
    t = mod_pow(a, q, p, counter)
    r = mod_pow(a, (q + 1) // 2, p, counter)
    while t != 1:
        i, t2 = 0, t
        while t2 != 1:
            t2 = t2 * t2 % p
            i += 1
        b = mod_pow(c, 1 << (m - i - 1), p, counter)
        m = i
        c = b * b % p
        t = t * c % p
        r = r * b % p
        if counter is not None:
            counter.add(i + 3)
    return (min(r, p - r), max(r, p - r))
