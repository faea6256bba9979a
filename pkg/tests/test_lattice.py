import math

import pytest

from oracles import disc_double_loop, octant_double_loop, primes_td
from quadres.lattice import (
    axis_points,
    count_disc,
    count_disc_sq,
    count_octant,
    count_octant_strict,
    diagonal_points,
    fit_octant_constant,
    lattice_census,
    on_circle_count,
    prime_point_ratio,
    split_prime_count,
)
from quadres.modmath import DomainError, primes_in_class


@pytest.mark.parametrize("r, exact, approx", [(0, 1, 0), (5, 81, 78), (2, 13, 12)])
def test_count_disc_examples(r, exact, approx):
    d = count_disc(r)
    assert (d.exact, d.approx) == (exact, approx)
    assert d.difference == exact - approx
    assert disc_double_loop(r) == exact


def test_count_disc_matches_double_loop():
    for r in range(0, 101):
        assert count_disc(r).exact == disc_double_loop(r)


@pytest.mark.parametrize("r", [0.5, 1.5, 2.25, 3.7, 7.07])
def test_count_disc_real_radius(r):
    assert count_disc(r).exact == disc_double_loop(r)


def test_count_disc_domain():
    with pytest.raises(DomainError):
        count_disc(-1)


@pytest.mark.parametrize("R, n", [(1, 0), (2, 1), (25, 9)])
def test_count_octant_examples(R, n):
    assert count_octant(R) == n == octant_double_loop(R)


def test_count_octant_matches_double_loop():
    for R in range(0, 3000, 7):
        assert count_octant(R) == octant_double_loop(R)


def test_symmetry_decomposition():
    for R in range(0, 10_001):
        n_disc = count_disc_sq(R)
        assert n_disc == 1 + 4 * axis_points(R) + 4 * diagonal_points(R) + 8 * count_octant_strict(R)


def test_fit_octant_constant():
    fit = fit_octant_constant([10**4, 10**5, 10**6])
    assert 0 < fit.c < 2
    assert len(fit.residuals) == 3
    n0 = count_octant(10**6)
    assert 0 < (math.pi * 1e6 / 8 - n0) / 1e3 < 2


def test_fit_octant_constant_domain():
    with pytest.raises(DomainError):
        fit_octant_constant([10**4, 10**5])
    with pytest.raises(DomainError):
        fit_octant_constant([10, 10**4, 10**5])


def test_fit_recovers_planted_constant():
    # the closed form is ordinary least squares: check it against numpy
    import numpy as np

    Rs = [10**3, 5 * 10**3, 2 * 10**4, 10**5]
    fit = fit_octant_constant(Rs)
    d = np.array([math.pi * R / 8 - count_octant(R) for R in Rs])
    c_ls = np.linalg.lstsq(np.sqrt(np.array(Rs, float))[:, None], d, rcond=None)[0][0]
    assert fit.c == pytest.approx(c_ls, rel=1e-12)


@pytest.mark.parametrize("R, n", [(13, 1), (7, 0), (25, 1), (2, 1), (65, 2), (1, 0)])
def test_on_circle_examples(R, n):
    assert on_circle_count(R) == n


def test_on_circle_for_primes():
    for p in primes_in_class(10**5, 1, 4):
        assert on_circle_count(p) == 1
    for q in primes_td(2000, 3, 4):
        assert on_circle_count(q) == 0


def test_on_circle_domain():
    with pytest.raises(DomainError):
        on_circle_count(0)


def test_prime_point_ratio_small():
    r = prime_point_ratio(25)
    assert (r.N, r.N0) == (4, 9)
    assert r.ratio == pytest.approx(0.444, abs=5e-4)
    assert r.predicted == pytest.approx(4 / (math.pi * math.log(25)))
    assert r.predicted == pytest.approx(0.396, abs=5e-4)
    assert r.half_pi_estimate == len(primes_td(25)) / 2 + 1
    assert r.log_estimate == pytest.approx(25 / (2 * math.log(25)))


@pytest.mark.parametrize("R", [100, 1000, 4321, 10**5])
def test_prime_point_count_routes_agree(R):
    r = prime_point_ratio(R)
    assert r.N == split_prime_count(R) == 1 + len(primes_td(R, 1, 4))
    assert lattice_census(R).n_prime_points == r.N


def test_lattice_census_fields():
    c = lattice_census(25)
    assert (c.n_disc, c.n_octant, c.n_prime_points) == (81, 9, 4)
    assert c.c_fit == pytest.approx((math.pi * 25 / 8 - 9) / 5)
