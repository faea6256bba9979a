"""Statistical tests and benchmarks built on the core modules."""

from .bench import (
    BenchSample,
    SqrtBench,
    bench_search_cost,
    bench_sqrt_methods,
    grid_decades,
    loglog_slope,
    nearest_prime_4m1,
    random_nonresidue_instances,
    random_satisfiable_instances,
)
from .stats import StatReport, chi2_sf, chi_square_counts, chi_square_uniform, gammaincc, kolmogorov_sf, ks_uniform
from .suite import randomness_suite, two_square_samples, wilson_root_samples

__all__ = [
    "BenchSample",
    "SqrtBench",
    "StatReport",
    "bench_search_cost",
    "bench_sqrt_methods",
    "chi2_sf",
    "chi_square_counts",
    "chi_square_uniform",
    "gammaincc",
    "grid_decades",
    "kolmogorov_sf",
    "ks_uniform",
    "loglog_slope",
    "nearest_prime_4m1",
    "random_nonresidue_instances",
    "random_satisfiable_instances",
    "randomness_suite",
    "two_square_samples",
    "wilson_root_samples",
]
