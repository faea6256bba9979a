"""Lattice points in and on circles.

Counts are exact integer computations (one ``isqrt`` per column); the
``floor(pi r**2)`` and ``pi R / 8`` formulas are reported next to them as
estimates, never substituted for them.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

import numpy as np

from .modmath import DomainError, primes_in_class, sieve

__all__ = [
    "DiscCount",
    "OctantFit",
    "PrimePointRatio",
    "LatticeCensus",
    "count_disc",
    "count_disc_sq",
    "count_octant",
    "count_octant_strict",
    "axis_points",
    "diagonal_points",
    "fit_octant_constant",
    "on_circle_count",
    "prime_point_ratio",
    "lattice_census",
]


@dataclass(frozen=True)
class DiscCount:
    exact: int
    approx: int  # floor(pi r^2)

    @property
    def difference(self) -> int:
        return self.exact - self.approx


def count_disc_sq(R: int) -> int:
    """Integer points ``(x, y)`` of any sign with ``x**2 + y**2 <= R``."""
    if R < 0:
        return 0
    r = math.isqrt(R)
    return sum(2 * math.isqrt(R - x * x) + 1 for x in range(-r, r + 1))


def count_disc(r: float) -> DiscCount:
    """Exact lattice count of the closed disc of radius ``r`` alongside
    ``floor(pi r**2)``.

    >>> count_disc(5)
    DiscCount(exact=81, approx=78)
    """
    if r < 0:
        raise DomainError(f"radius must be >= 0, got {r}")
    r2 = Fraction(r) ** 2
    # floor(sqrt(q)) == isqrt(floor(q)) for rational q >= 0
    exact = count_disc_sq(math.floor(r2))
    return DiscCount(exact, math.floor(math.pi * float(r2)))


def count_octant(R: int) -> int:
    """Points with ``x >= y > 0`` and ``x**2 + y**2 <= R`` (diagonal included)."""
    if R < 0:
        raise DomainError(f"R must be >= 0, got {R}")
    return sum(math.isqrt(R - y * y) - y + 1 for y in range(1, math.isqrt(R // 2) + 1))


def count_octant_strict(R: int) -> int:
    """Points with ``x > y > 0`` and ``x**2 + y**2 <= R``."""
    return count_octant(R) - diagonal_points(R)


def axis_points(R: int) -> int:
    """Lattice points on one open half-axis inside the disc: ``#{x >= 1: x**2 <= R}``."""
    return math.isqrt(R) if R > 0 else 0


def diagonal_points(R: int) -> int:
    """``#{x >= 1: 2 x**2 <= R}``."""
    return math.isqrt(R // 2) if R > 0 else 0


@dataclass(frozen=True)
class OctantFit:
    c: float
    R_values: tuple[int, ...]
    residuals: tuple[float, ...]  # (pi R/8 - c sqrt(R) - N0) / sqrt(R)


def fit_octant_constant(R_values: Sequence[int]) -> OctantFit:
    """Least-squares ``c`` in ``N0(R) ~ pi R / 8 - c sqrt(R)``.

    Minimises the summed squared count error, which has the closed form
    ``c = sum(sqrt(R) d) / sum(R)`` with ``d = pi R/8 - N0``.
    """
    Rs = tuple(int(R) for R in R_values)
    if len(Rs) < 3:
        raise DomainError(f"need at least 3 values of R, got {len(Rs)}")
    if min(Rs) < 100:
        raise DomainError("every R must be >= 100")
    R = np.array(Rs, dtype=float)
    n0 = np.array([count_octant(r) for r in Rs], dtype=float)
    d = math.pi * R / 8 - n0
    root = np.sqrt(R)
    c = float(np.dot(root, d) / np.sum(R))
    residuals = (d - c * root) / root
    return OctantFit(c, Rs, tuple(float(v) for v in residuals))


def on_circle_count(R: int) -> int:
    """Pairs ``x >= y > 0`` with ``x**2 + y**2 == R`` exactly."""
    if R < 1:
        raise DomainError(f"R must be >= 1, got {R}")
    n = 0
    for y in range(1, math.isqrt(R // 2) + 1):
        rest = R - y * y
        x = math.isqrt(rest)
        if x * x == rest:
            n += 1
    return n


@dataclass(frozen=True)
class PrimePointRatio:
    R: int
    N: int
    N0: int
    ratio: float
    predicted: float  # 4 / (pi log R)
    half_pi_estimate: float  # pi(R)/2 + 1
    log_estimate: float  # R / (2 log R)


def prime_point_ratio(R: int) -> PrimePointRatio:
    """Share of octant lattice points whose norm is 2 or a prime ``4m+1``."""
    if R < 2:
        raise DomainError(f"R must be >= 2, got {R}")
    primes = sieve(R)
    N = 1 + int(np.count_nonzero(primes % 4 == 1))
    N0 = count_octant(R)
    return PrimePointRatio(
        R=R,
        N=N,
        N0=N0,
        ratio=N / N0,
        predicted=4 / (math.pi * math.log(R)),
        half_pi_estimate=primes.size / 2 + 1,
        log_estimate=R / (2 * math.log(R)),
    )


@dataclass(frozen=True)
class LatticeCensus:
    R: int
    n_disc: int
    n_octant: int
    n_prime_points: int
    c_fit: float  # (pi R/8 - N0) / sqrt(R)

    def __post_init__(self) -> None:
        assert self.n_prime_points <= self.n_octant <= self.n_disc


def _octant_prime_points(R: int) -> int:
    # walks the octant point by point and tests each norm, independently of
    # the prime count N in prime_point_ratio
    if R < 2:
        return 0
    is_p = np.zeros(R + 1, dtype=bool)
    is_p[sieve(R)] = True
    n = 0
    for y in range(1, math.isqrt(R // 2) + 1):
        x = np.arange(y, math.isqrt(R - y * y) + 1, dtype=np.int64)
        n += int(np.count_nonzero(is_p[x * x + y * y]))
    return n


def lattice_census(R: int) -> LatticeCensus:
    if R < 1:
        raise DomainError(f"R must be >= 1, got {R}")
    n0 = count_octant(R)
    return LatticeCensus(
        R=R,
        n_disc=count_disc_sq(R),
        n_octant=n0,
        n_prime_points=_octant_prime_points(R),
        c_fit=(math.pi * R / 8 - n0) / math.sqrt(R),
    )


def split_prime_count(R: int) -> int:
    """``1 + #{p <= R: p = 1 (mod 4)}`` via the prime stream."""
    return 1 + sum(1 for _ in primes_in_class(R, 1, 4))
