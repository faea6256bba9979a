"""Cost measurements for the square-root and search procedures.

Two costs are recorded per run: wall time (median over repetitions, single
thread) and a machine-independent operation count. Scaling exponents are
least-squares slopes on log-log axes.
"""

from __future__ import annotations

import random
import statistics
import time
from dataclasses import dataclass
from typing import Callable, Iterable, Sequence

import numpy as np

from ..modmath import DomainError, OpCounter, is_prime, require_prime_4m1, sqrt_mod_prime, wilson_sqrt_minus_one
from ..quadcong import QCInstance, brute_force
from ..twosquares import decompose, decompose_brute

__all__ = [
    "BenchSample",
    "SqrtBench",
    "loglog_slope",
    "bench_sqrt_methods",
    "bench_search_cost",
    "nearest_prime_4m1",
    "random_satisfiable_instances",
    "random_nonresidue_instances",
    "grid_decades",
]

WILSON = "wilson_sqrt_minus_one"
TONELLI = "sqrt_mod_prime"
DESCENT = "decompose"
SCAN = "decompose_brute"
SEARCH = "brute_force"


@dataclass(frozen=True)
class BenchSample:
    op_label: str
    input_magnitude: int
    wall_time_ns: int  # median over repetitions
    op_count: int
    repetitions: int

    def __post_init__(self) -> None:
        if self.wall_time_ns <= 0:
            raise ValueError("wall_time_ns must be positive")
        if self.op_count < 0:
            raise ValueError("op_count must be >= 0")


def loglog_slope(x: Sequence[float], y: Sequence[float]) -> float:
    """Least-squares slope of ``log y`` against ``log x``."""
    lx = np.log(np.asarray(x, dtype=float))
    ly = np.log(np.asarray(y, dtype=float))
    slope, _ = np.polyfit(lx, ly, 1)
    return float(slope)


def _timed(fn: Callable[[], int], reps: int) -> tuple[int, int]:
    times = []
    ops = 0
    for _ in range(reps):
        t0 = time.perf_counter_ns()
        ops = fn()
        times.append(time.perf_counter_ns() - t0)
    return max(1, int(statistics.median(times))), ops


def _wilson(p: int) -> int:
    c = OpCounter()
    wilson_sqrt_minus_one(p, c)
    return c.mults


def _tonelli(p: int) -> int:
    c = OpCounter()
    sqrt_mod_prime(p - 1, p, c)
    return c.mults


def _descent(p: int) -> int:
    c = OpCounter()
    decompose(p, c)
    return c.mults


def _scan(p: int) -> int:
    return decompose_brute(p)[1]


METHODS: dict[str, Callable[[int], int]] = {
    WILSON: _wilson,
    TONELLI: _tonelli,
    DESCENT: _descent,
    SCAN: _scan,
}


@dataclass(frozen=True)
class SqrtBench:
    samples: list[BenchSample]
    op_slopes: dict[str, float]
    time_slopes: dict[str, float]


def bench_sqrt_methods(
    prime_grid: Sequence[int], reps: int = 5, methods: Iterable[str] = tuple(METHODS)
) -> SqrtBench:
    """Time each square-root method on each prime of ``prime_grid``.

    The grid must be ascending, hold at least 4 primes ``4m+1`` and span at
    least three decades; ``reps >= 5``.
    """
    grid = [int(p) for p in prime_grid]
    if len(grid) < 4:
        raise DomainError(f"grid needs >= 4 sizes, got {len(grid)}")
    if any(b <= a for a, b in zip(grid, grid[1:])):
        raise DomainError("grid must be strictly ascending")
    # decades counted by order of magnitude, so 10009 .. 10000121 spans three
    if len(str(grid[-1])) - len(str(grid[0])) < 3:
        raise DomainError("grid must span at least three decades")
    if reps < 5:
        raise DomainError(f"reps must be >= 5, got {reps}")
    for p in grid:
        require_prime_4m1(p)

    samples: list[BenchSample] = []
    op_slopes: dict[str, float] = {}
    time_slopes: dict[str, float] = {}
    for label in methods:
        fn = METHODS[label]
        rows = []
        for p in grid:
            ns, ops = _timed(lambda: fn(p), reps)
            rows.append(BenchSample(label, p, ns, ops, reps))
        samples += rows
        op_slopes[label] = loglog_slope(grid, [max(r.op_count, 1) for r in rows])
        time_slopes[label] = loglog_slope(grid, [r.wall_time_ns for r in rows])
    return SqrtBench(samples, op_slopes, time_slopes)


def bench_search_cost(instances: Iterable[QCInstance], reps: int = 1) -> list[BenchSample]:
    """Run :func:`brute_force` on each instance; ``op_count`` is the number
    of candidates visited and ``input_magnitude`` the modulus."""
    out = []
    for inst in instances:
        ns, visited = _timed(lambda: brute_force(inst)[1], reps)
        out.append(BenchSample(SEARCH, inst.b, ns, visited, reps))
    if not out:
        raise DomainError("no instances given")
    return out


def nearest_prime_4m1(n: int) -> int:
    """Smallest prime ``p >= n`` with ``p = 1 (mod 4)``."""
    p = max(n, 5)
    p += (1 - p) % 4
    while not is_prime(p):
        p += 4
    return p


def _random_prime(rng: random.Random, lo: int, hi: int) -> int:
    while True:
        q = rng.randrange(lo, hi)
        if is_prime(q):
            return q


def random_satisfiable_instances(b: int, count: int, seed: int = 0) -> list[QCInstance]:
    """Instances ``(x0**2 mod b, b, b)`` with ``x0`` drawn uniformly in
    ``[1, b)`` and ``x0**2`` nonzero mod ``b``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        x0 = rng.randrange(1, b)
        a = x0 * x0 % b
        if a:
            out.append(QCInstance(a, b, b))
    return out


def random_nonresidue_instances(count: int, lo: int = 3, hi: int = 10_000, seed: int = 0) -> list[QCInstance]:
    """Instances ``(a, q, c)`` with ``q`` an odd prime in ``[lo, hi)``, ``a``
    a quadratic non-residue mod ``q`` and ``c`` uniform in ``[1, 2q]``."""
    rng = random.Random(seed)
    out = []
    while len(out) < count:
        q = _random_prime(rng, max(lo, 3), hi)
        a = rng.randrange(1, q)
        if pow(a, (q - 1) // 2, q) != q - 1:
            continue
        out.append(QCInstance(a, q, rng.randint(1, 2 * q)))
    return out


def grid_decades(start_exp: int = 4, stop_exp: int = 7) -> list[int]:
    """``nearest_prime_4m1(10**k)`` for each ``k`` in ``[start_exp, stop_exp]``."""
    return [nearest_prime_4m1(10**k) for k in range(start_exp, stop_exp + 1)]

