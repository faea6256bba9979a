"""Census of Gaussian primes in the first quadrant, globally and by sector.

One representative per associate class is kept: the one with argument in
``[0, pi/2)``. That leaves

* the ramified prime ``1 + i`` (norm 2, argument pi/4),
* both ``s + t i`` and ``t + s i`` for each rational prime ``p = s**2 + t**2``
  with ``p = 1 (mod 4)``,
* each rational prime ``q = 3 (mod 4)`` with ``q**2 <= x`` (argument 0).

The split primes come from :func:`quadres.twosquares.decompose` applied to a
sieve of rational primes; the lattice is never scanned.
"""

from __future__ import annotations

import math
from collections import OrderedDict
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Iterator, NamedTuple, Optional, Sequence

import numpy as np

from .modmath import DomainError, sieve
from .twosquares import decompose

__all__ = [
    "GaussianInteger",
    "SectorHistogram",
    "census_arrays",
    "enumerate_gaussian_primes",
    "count_pi_zi",
    "census_formula",
    "sector_count",
    "sector_expected",
    "sector_histogram",
]

HALF_PI = math.pi / 2


@dataclass(frozen=True, order=True)
class GaussianInteger:
    re: int
    im: int

    @property
    def norm(self) -> int:
        return self.re * self.re + self.im * self.im

    @property
    def arg(self) -> float:
        """Principal argument normalised to ``[0, 2*pi)``."""
        a = math.atan2(self.im, self.re)
        return a + 2 * math.pi if a < 0 else a

    def __str__(self) -> str:
        if self.im == 0:
            return str(self.re)
        im = "i" if self.im == 1 else f"{self.im}i"
        return f"{self.re}+{im}" if self.re else im


class Census(NamedTuple):
    re: np.ndarray
    im: np.ndarray
    norm: np.ndarray
    arg: np.ndarray


def _split_pairs(primes: Sequence[int]) -> list[tuple[int, int]]:
    out = []
    for p in primes:
        d = decompose(p)
        out.append((d.s, d.t))
    return out


def _decompose_all(primes: list[int], workers: int) -> list[tuple[int, int]]:
    if workers <= 1 or len(primes) < 4 * workers:
        return _split_pairs(primes)
    step = -(-len(primes) // workers)
    chunks = [primes[i : i + step] for i in range(0, len(primes), step)]
    with ProcessPoolExecutor(max_workers=workers) as pool:
        parts = pool.map(_split_pairs, chunks)
    return [pair for part in parts for pair in part]


def _build_census(x_limit: int, workers: int) -> Census:
    primes = sieve(x_limit)
    split = primes[primes % 4 == 1].tolist()
    pairs = _decompose_all(split, workers)
    inert = primes[(primes % 4 == 3) & (primes <= math.isqrt(x_limit))]

    re: list[int] = [1]
    im: list[int] = [1]
    for s, t in pairs:
        re += [s, t]
        im += [t, s]
    re += inert.tolist()
    im += [0] * inert.size

    re_a = np.array(re, dtype=np.int64)
    im_a = np.array(im, dtype=np.int64)
    norm = re_a * re_a + im_a * im_a
    arg = np.arctan2(im_a.astype(float), re_a.astype(float))
    order = np.lexsort((arg, norm))
    return Census(re_a[order], im_a[order], norm[order], arg[order])


# results do not depend on the worker count, so only x_limit keys the cache
_CACHE: "OrderedDict[int, Census]" = OrderedDict()
_CACHE_SIZE = 8


def census_arrays(x_limit: int, workers: int = 1) -> Census:
    """Census as parallel numpy arrays sorted by (norm, arg)."""
    if x_limit < 2:
        raise DomainError(f"x_limit must be >= 2, got {x_limit}")
    if workers < 1:
        raise DomainError(f"workers must be >= 1, got {workers}")
    if x_limit in _CACHE:
        _CACHE.move_to_end(x_limit)
        return _CACHE[x_limit]
    c = _CACHE[x_limit] = _build_census(x_limit, workers)
    if len(_CACHE) > _CACHE_SIZE:
        _CACHE.popitem(last=False)
    return c


def enumerate_gaussian_primes(x_limit: int, workers: int = 1) -> Iterator[GaussianInteger]:
    """Yield the first-quadrant Gaussian primes of norm ``<= x_limit``,
    ascending by norm, then by argument.

    >>> [str(g) for g in enumerate_gaussian_primes(25)]
    ['1+i', '2+i', '1+2i', '3', '3+2i', '2+3i', '4+i', '1+4i']
    """
    c = census_arrays(x_limit, workers)
    for re, im in zip(c.re.tolist(), c.im.tolist()):
        yield GaussianInteger(re, im)


def count_pi_zi(x_limit: int, workers: int = 1) -> tuple[int, float]:
    """Census size and the ratio ``count * log(x) / x`` (tends to 1)."""
    if x_limit < 3:
        raise DomainError(f"x_limit must be >= 3, got {x_limit}")
    n = int(census_arrays(x_limit, workers).norm.size)
    return n, n * math.log(x_limit) / x_limit


def census_formula(x_limit: int) -> int:
    """``1 + 2 * #{p <= x, p = 1 (4)} + #{q <= sqrt(x), q = 3 (4)}`` counted
    straight from a rational sieve."""
    primes = sieve(x_limit)
    split = int(np.count_nonzero(primes % 4 == 1))
    inert = int(np.count_nonzero((primes % 4 == 3) & (primes <= math.isqrt(x_limit))))
    return 1 + 2 * split + inert


def _check_sector(theta1: float, theta2: float) -> None:
    if not theta1 < theta2:
        raise DomainError(f"need theta1 < theta2, got {theta1} >= {theta2}")
    if theta1 < 0 or theta2 > HALF_PI:
        raise DomainError("sector must lie within [0, pi/2]")


def sector_count(x_limit: int, theta1: float, theta2: float) -> int:
    """Census primes with ``theta1 <= arg <= theta2`` (both ends inclusive)."""
    _check_sector(theta1, theta2)
    arg = census_arrays(x_limit).arg
    return int(np.count_nonzero((arg >= theta1) & (arg <= theta2)))


def sector_expected(x_limit: int, theta1: float, theta2: float) -> float:
    """Equidistribution prediction ``(2/pi) (theta2 - theta1) x / log x``.

    The sector width is taken as ``theta2 - theta1``. Writing it the other
    way round gives a negative count.
    """
    _check_sector(theta1, theta2)
    return (2 / math.pi) * (theta2 - theta1) * x_limit / math.log(x_limit)


@dataclass(frozen=True)
class SectorHistogram:
    x_limit: int
    bin_edges: np.ndarray
    counts: np.ndarray

    @property
    def total(self) -> int:
        return int(self.counts.sum())

    @property
    def bins(self) -> int:
        return int(self.counts.size)

    def expected(self) -> np.ndarray:
        """Per-bin counts under a uniform angular law."""
        widths = np.diff(self.bin_edges)
        return self.total * widths / (self.bin_edges[-1] - self.bin_edges[0])

    def rows(self) -> Iterator[tuple[float, float, int, float]]:
        exp = self.expected()
        for k in range(self.bins):
            yield (float(self.bin_edges[k]), float(self.bin_edges[k + 1]), int(self.counts[k]), float(exp[k]))


def bin_index(values: np.ndarray, lo: float, hi: float, bins: int) -> np.ndarray:
    """Equal-width bin of each value; a value on an interior edge goes to the
    lower bin, ``lo`` itself to bin 0."""
    width = (hi - lo) / bins
    idx = np.ceil((np.asarray(values, dtype=float) - lo) / width).astype(np.int64) - 1
    return np.clip(idx, 0, bins - 1)


def sector_histogram(
    x_limit: int, bins: int, exclude_axis: bool = False, workers: int = 1
) -> SectorHistogram:
    """Equal-width angular histogram of the census over ``[0, pi/2)``.

    ``exclude_axis`` drops the inert primes (argument exactly 0), which
    otherwise all pile into the first bin.
    """
    if bins < 2:
        raise DomainError(f"bins must be >= 2, got {bins}")
    arg = census_arrays(x_limit, workers).arg
    if exclude_axis:
        arg = arg[arg > 0]
    counts = np.bincount(bin_index(arg, 0.0, HALF_PI, bins), minlength=bins)
    edges = np.linspace(0.0, HALF_PI, bins + 1)
    return SectorHistogram(x_limit, edges, counts)


def max_min_ratio(hist: SectorHistogram) -> Optional[float]:
    lo = int(hist.counts.min())
    return None if lo == 0 else int(hist.counts.max()) / lo
