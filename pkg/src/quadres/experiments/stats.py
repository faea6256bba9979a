"""Goodness-of-fit against the uniform law: chi-square and Kolmogorov-Smirnov.

The tail probabilities are computed here rather than pulled from scipy:

* chi-square: ``Q(k/2, x/2)``, the regularised upper incomplete gamma
  function, by its power series when ``x < a + 1`` and by Lentz's continued
  fraction otherwise;
* KS: the asymptotic Kolmogorov distribution, using the alternating series
  for ``lambda >= 1`` and the Jacobi theta form below.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field
from typing import Optional, Sequence

import numpy as np

from ..gausscensus import SectorHistogram, bin_index
from ..modmath import DomainError

__all__ = [
    "StatReport",
    "gammaincc",
    "chi2_sf",
    "kolmogorov_sf",
    "chi_square_counts",
    "chi_square_uniform",
    "ks_uniform",
]

_EPS = 1e-15
_TINY = 1e-300
_MAX_ITER = 10_000


@dataclass(frozen=True)
class StatReport:
    test_name: str
    sample_size: int
    statistic: float
    p_value: float
    bins: Optional[SectorHistogram] = field(default=None, compare=False, repr=False)

    def __post_init__(self) -> None:
        if self.sample_size <= 0:
            raise ValueError("sample_size must be positive")
        if not 0.0 <= self.p_value <= 1.0:
            raise ValueError(f"p_value out of range: {self.p_value}")

    def as_dict(self) -> dict:
        return {
            "test_name": self.test_name,
            "n": self.sample_size,
            "statistic": self.statistic,
            "p_value": self.p_value,
        }


def _gamma_series(a: float, x: float) -> float:
    # lower regularised P(a, x)
    term = total = 1.0 / a
    ap = a
    for _ in range(_MAX_ITER):
        ap += 1.0
        term *= x / ap
        total += term
        if abs(term) < abs(total) * _EPS:
            break
    return total * math.exp(-x + a * math.log(x) - math.lgamma(a))


def _gamma_cf(a: float, x: float) -> float:
    # upper regularised Q(a, x), modified Lentz
    b = x + 1.0 - a
    c = 1.0 / _TINY
    d = 1.0 / b
    h = d
    for i in range(1, _MAX_ITER):
        an = -i * (i - a)
        b += 2.0
        d = an * d + b
        if abs(d) < _TINY:
            d = _TINY
        c = b + an / c
        if abs(c) < _TINY:
            c = _TINY
        d = 1.0 / d
        delta = d * c
        h *= delta
        if abs(delta - 1.0) < _EPS:
            break
    return math.exp(-x + a * math.log(x) - math.lgamma(a)) * h


def gammaincc(a: float, x: float) -> float:
    """Regularised upper incomplete gamma ``Q(a, x)``."""
    if a <= 0:
        raise DomainError(f"a must be positive, got {a}")
    if x < 0:
        raise DomainError(f"x must be >= 0, got {x}")
    if x == 0:
        return 1.0
    if x < a + 1.0:
        return max(0.0, 1.0 - _gamma_series(a, x))
    return min(1.0, _gamma_cf(a, x))


def chi2_sf(stat: float, dof: int) -> float:
    return gammaincc(dof / 2.0, stat / 2.0)


def kolmogorov_sf(lam: float) -> float:
    """``P(sqrt(n) D > lam)`` in the large-``n`` limit."""
    if lam <= 0:
        return 1.0
    if lam < 1.0:
        # 1 - sqrt(2 pi)/lam * sum exp(-(2j-1)^2 pi^2 / (8 lam^2))
        k = -(math.pi**2) / (8.0 * lam * lam)
        s = sum(math.exp(k * (2 * j - 1) ** 2) for j in range(1, 8))
        return min(1.0, max(0.0, 1.0 - math.sqrt(2.0 * math.pi) / lam * s))
    s = 0.0
    for j in range(1, 101):
        term = math.exp(-2.0 * j * j * lam * lam)
        s += term if j % 2 else -term
        if term < _EPS * max(s, _TINY):
            break
    return min(1.0, max(0.0, 2.0 * s))


def chi_square_counts(
    counts: Sequence[int], expected: Sequence[float], name: str = "chi_square"
) -> StatReport:
    """Pearson statistic of observed vs expected counts, ``len - 1`` dof."""
    obs = np.asarray(counts, dtype=float)
    exp = np.asarray(expected, dtype=float)
    if obs.shape != exp.shape or obs.size < 2:
        raise DomainError("need matching count/expectation vectors with >= 2 bins")
    if exp.min() < 5:
        raise DomainError(f"under-sampled: smallest expected count {exp.min():.3g} < 5")
    stat = float(np.sum((obs - exp) ** 2 / exp))
    return StatReport(name, int(obs.sum()), stat, chi2_sf(stat, obs.size - 1))


def _check_range(x: np.ndarray, lo: float, hi: float) -> None:
    if not lo < hi:
        raise DomainError(f"empty range [{lo}, {hi}]")
    if x.size and (x.min() < lo or x.max() > hi):
        raise DomainError(f"samples fall outside [{lo}, {hi}]")


def chi_square_uniform(
    samples: Sequence[float], lo: float, hi: float, bins: int, name: str = "chi_square_uniform"
) -> StatReport:
    """Chi-square test of ``samples`` against the uniform law on ``[lo, hi]``.

    Bins are equal width; a sample on an interior edge counts in the lower bin.
    Raises :class:`DomainError` if fewer than 5 samples per bin are expected.
    """
    x = np.asarray(samples, dtype=float)
    if bins < 2:
        raise DomainError(f"bins must be >= 2, got {bins}")
    _check_range(x, lo, hi)
    counts = np.bincount(bin_index(x, lo, hi, bins), minlength=bins)
    return chi_square_counts(counts, np.full(bins, x.size / bins), name)


def ks_uniform(samples: Sequence[float], lo: float, hi: float, name: str = "ks_uniform") -> StatReport:
    """One-sample KS test against the uniform CDF on ``[lo, hi]``."""
    x = np.asarray(samples, dtype=float)
    _check_range(x, lo, hi)
    n = x.size
    if n < 10:
        raise DomainError(f"need at least 10 samples, got {n}")
    u = np.sort((x - lo) / (hi - lo))
    i = np.arange(1, n + 1)
    d = float(max(np.max(i / n - u), np.max(u - (i - 1) / n)))
    return StatReport(name, n, d, kolmogorov_sf(math.sqrt(n) * d))
