import math

import numpy as np
import pytest

from oracles import gaussian_primes_scan, is_prime_td, primes_td
from quadres import gausscensus
from quadres.gausscensus import (
    GaussianInteger,
    census_arrays,
    census_formula,
    count_pi_zi,
    enumerate_gaussian_primes,
    max_min_ratio,
    sector_count,
    sector_expected,
    sector_histogram,
)
from quadres.modmath import DomainError
from quadres.twosquares import decompose

EXPECTED_25 = [(1, 1), (2, 1), (1, 2), (3, 0), (3, 2), (2, 3), (4, 1), (1, 4)]


def pairs(x, workers=1):
    return [(g.re, g.im) for g in enumerate_gaussian_primes(x, workers)]


def test_enumerate_examples():
    assert pairs(25) == EXPECTED_25 == gaussian_primes_scan(25)
    assert len(pairs(100)) == 25 == len(gaussian_primes_scan(100))
    assert pairs(2) == [(1, 1)]


@pytest.mark.parametrize("x", [2, 3, 9, 10, 48, 49, 50, 1000, 5000])
def test_enumerate_matches_lattice_scan(x):
    assert pairs(x) == gaussian_primes_scan(x)


def test_enumerate_domain():
    with pytest.raises(DomainError):
        list(enumerate_gaussian_primes(1))


def test_workers_do_not_change_result():
    gausscensus._CACHE.clear()
    parallel = pairs(20_000, workers=3)
    gausscensus._CACHE.clear()
    assert parallel == pairs(20_000, workers=1)


def test_gaussian_integer():
    g = GaussianInteger(3, 4)
    assert g.norm == 25
    assert g.arg == pytest.approx(math.atan2(4, 3))
    assert GaussianInteger(-1, -1).arg == pytest.approx(5 * math.pi / 4)
    assert GaussianInteger(1, -1).arg == pytest.approx(7 * math.pi / 4)
    assert str(GaussianInteger(1, 1)) == "1+i" and str(GaussianInteger(3, 0)) == "3"


def test_every_element_is_prime_with_bounded_norm():
    x = 10_000
    for g in enumerate_gaussian_primes(x):
        assert g.norm <= x
        assert 0 <= g.arg < math.pi / 2
        if g.im == 0:
            assert is_prime_td(g.re) and g.re % 4 == 3 and g.norm == g.re**2
        else:
            assert is_prime_td(g.norm)


def test_sorted_by_norm_then_arg():
    c = census_arrays(50_000)
    key = list(zip(c.norm.tolist(), c.arg.tolist()))
    assert key == sorted(key)


@pytest.mark.parametrize("x", [2, 3, 8, 9, 25, 100, 1000, 12_345, 99_999])
def test_census_formula(x):
    split = len(primes_td(x, 1, 4))
    inert = len(primes_td(math.isqrt(x), 3, 4))
    assert census_formula(x) == 1 + 2 * split + inert == len(list(enumerate_gaussian_primes(x)))


def test_split_primes_link_to_decomposition():
    for g in enumerate_gaussian_primes(20_000):
        if g.im and g.norm > 2:
            d = decompose(g.norm)
            assert {abs(g.re), abs(g.im)} == {d.s, d.t}


@pytest.mark.parametrize("x, count, ratio", [(25, 8, 1.030), (100, 25, 1.151)])
def test_count_pi_zi_examples(x, count, ratio):
    n, r = count_pi_zi(x)
    assert n == count
    assert r == pytest.approx(count * math.log(x) / x)
    assert r == pytest.approx(ratio, abs=5e-4)


def test_count_pi_zi_domain():
    with pytest.raises(DomainError):
        count_pi_zi(2)


def test_sector_count_examples():
    assert sector_count(25, 0, math.pi / 2) == 8
    assert sector_count(25, 0, 0.1) == 1
    assert sector_count(25, math.pi / 4, math.pi / 4 + 1e-9) == 1


def test_sector_count_domain():
    with pytest.raises(DomainError):
        sector_count(25, 0.5, 0.5)
    with pytest.raises(DomainError):
        sector_count(25, 0.6, 0.5)


def test_sector_count_additivity():
    x = 50_000
    arg = census_arrays(x).arg
    for t1, t2, t3 in [(0.0, 0.3, 1.2), (0.1, math.pi / 4, math.pi / 2), (0.2, 0.7, 0.9)]:
        t2b = math.nextafter(t2, 10.0)
        assert not np.any((arg > t2) & (arg < t2b))
        assert sector_count(x, t1, t2) + sector_count(x, t2b, t3) == sector_count(x, t1, t3)


def test_sector_expected_is_positive():
    e = sector_expected(10**6, 0.1, 0.5)
    assert e == pytest.approx((2 / math.pi) * 0.4 * 1e6 / math.log(1e6))
    assert e > 0


def test_histogram_small():
    h = sector_histogram(25, 2)
    assert h.total == 8
    # 1+i sits exactly on the pi/4 edge and goes to the lower bin
    assert h.counts.tolist() == [5, 3]
    assert h.bin_edges[0] == 0 and h.bin_edges[-1] == pytest.approx(math.pi / 2)
    assert np.all(np.diff(h.bin_edges) > 0)


@pytest.mark.parametrize("x, bins", [(100, 2), (1000, 7), (30_000, 16), (30_000, 90)])
def test_histogram_conservation(x, bins):
    h = sector_histogram(x, bins)
    assert h.total == census_formula(x)
    assert sum(c for _, _, c, _ in h.rows()) == h.total
    assert h.expected().sum() == pytest.approx(h.total)


def test_histogram_exclude_axis():
    h = sector_histogram(10_000, 4, exclude_axis=True)
    inert = len(primes_td(100, 3, 4))
    assert h.total == census_formula(10_000) - inert


def test_histogram_domain():
    with pytest.raises(DomainError):
        sector_histogram(100, 1)


def test_histogram_balanced_at_1e6():
    h = sector_histogram(10**6, 16)
    assert max_min_ratio(h) < 1.25
