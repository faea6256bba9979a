"""Uniformity tests on two-square angles, Wilson roots and the Gaussian census.

Every sample is a deterministic function of ``p_limit``, so repeated runs give
identical reports.
"""

from __future__ import annotations

import math

import numpy as np

from ..gausscensus import HALF_PI, census_arrays, sector_histogram
from ..modmath import DomainError, primes_in_class, sqrt_mod_prime
from ..twosquares import decompose
from .stats import StatReport, chi_square_counts, chi_square_uniform, ks_uniform

__all__ = ["two_square_samples", "wilson_root_samples", "randomness_suite"]

QUARTER_PI = math.pi / 4
SUITE_BINS = 16


def two_square_samples(p_limit: int) -> tuple[np.ndarray, np.ndarray]:
    """Angles ``atan(t/s)`` and normalised ``s / sqrt(p)`` for every prime
    ``p = 1 (mod 4)`` up to ``p_limit``."""
    theta, s_norm = [], []
    for p in primes_in_class(p_limit, 1, 4):
        d = decompose(p)
        theta.append(d.theta)
        s_norm.append(d.s / math.sqrt(p))
    return np.array(theta), np.array(s_norm)


def wilson_root_samples(p_limit: int) -> np.ndarray:
    """``min(w, p - w) / p`` for ``w = ((p-1)/2)! mod p``, p = 1 (mod 4).

    The smaller root of -1 is unique, so it is read off the Tonelli-Shanks
    pair rather than recomputed through a linear-cost factorial.
    """
    out = []
    for p in primes_in_class(p_limit, 1, 4):
        roots = sqrt_mod_prime(p - 1, p)
        out.append(roots[0] / p)
    return np.array(out)


def randomness_suite(p_limit: int, bins: int = SUITE_BINS) -> list[StatReport]:
    """Chi-square and KS uniformity reports for

    * two-square angles on ``(0, pi/4)``,
    * ``s / sqrt(p)`` on ``(1/sqrt 2, 1)``,
    * normalised Wilson roots on ``(0, 1/2)``,
    * Gaussian-prime arguments on ``[0, pi/2)`` at norm bound ``p_limit``.

    ``s / sqrt(p)`` equals ``cos(theta)``, so uniform angles make it
    non-uniform on a linear scale; its reports are expected to reject.
    """
    if p_limit < 10_000:
        raise DomainError(f"p_limit must be >= 10^4, got {p_limit}")
    theta, s_norm = two_square_samples(p_limit)
    wilson = wilson_root_samples(p_limit)

    reports = [
        chi_square_uniform(theta, 0.0, QUARTER_PI, bins, "theta_chi2"),
        ks_uniform(theta, 0.0, QUARTER_PI, "theta_ks"),
        chi_square_uniform(s_norm, 1 / math.sqrt(2), 1.0, bins, "s_norm_chi2"),
        ks_uniform(s_norm, 1 / math.sqrt(2), 1.0, "s_norm_ks"),
        chi_square_uniform(wilson, 0.0, 0.5, bins, "wilson_root_chi2"),
        ks_uniform(wilson, 0.0, 0.5, "wilson_root_ks"),
    ]

    hist = sector_histogram(p_limit, bins)
    sector = chi_square_counts(hist.counts, hist.expected(), "gaussian_sector_chi2")
    reports.append(
        StatReport(sector.test_name, sector.sample_size, sector.statistic, sector.p_value, bins=hist)
    )
    arg = census_arrays(p_limit).arg
    reports.append(ks_uniform(arg, 0.0, HALF_PI, "gaussian_arg_ks"))
    return reports
