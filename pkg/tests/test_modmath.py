import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from oracles import factorial_direct, is_prime_td, pow_repeated, primes_td, sqrt_enum
from quadres.modmath import (
    DomainError,
    OpCounter,
    factorial_mod,
    is_prime,
    legendre_symbol,
    mod_pow,
    primes_in_class,
    sieve,
    sqrt_mod_prime,
    wilson_sqrt_minus_one,
)

PRIMES_1E4 = primes_td(10_000)
P4M1_1E4 = [p for p in PRIMES_1E4 if p % 4 == 1]


@pytest.mark.parametrize("args, expected", [((2, 10, 1000), 24), ((7, 1, 13), 7), ((3, 5, 5), 3)])
def test_mod_pow_examples(args, expected):
    assert mod_pow(*args) == expected
    assert pow_repeated(*args) == expected


def test_mod_pow_rejects_zero_modulus():
    with pytest.raises(DomainError):
        mod_pow(2, 3, 0)


@given(st.integers(0, 10**6), st.integers(0, 200), st.integers(1, 10**6))
def test_mod_pow_matches_repeated_multiplication(base, exp, m):
    assert mod_pow(base, exp, m) == pow_repeated(base, exp, m)


def test_mod_pow_counts_square_and_multiply():
    c = OpCounter()
    mod_pow(3, 0b1011, 101, c)  # 3 squarings + 2 multiplies
    assert c.mults == 5


def test_fermat_little_theorem():
    rng = random.Random(2)
    primes = sieve(10**6).tolist()
    for _ in range(200):
        p = rng.choice(primes)
        n = rng.randrange(0, 10**9)
        assert mod_pow(n, p, p) == n % p


@pytest.mark.parametrize("p", [p for p in PRIMES_1E4 if p <= 1000])
def test_square_is_periodic_mod_p(p):
    for x in range(p):
        assert (x + p) ** 2 % p == x * x % p
        assert mod_pow(x + p, 2, p) == mod_pow(x, 2, p)


@pytest.mark.parametrize("n, expected", [(13, True), (1, False), (561, False), (0, False), (2, True)])
def test_is_prime_examples(n, expected):
    assert is_prime(n) is expected


def test_is_prime_matches_trial_division():
    assert [n for n in range(20_000) if is_prime(n)] == primes_td(20_000 - 1)


@pytest.mark.parametrize(
    "n, expected",
    [
        (3215031751, False),  # strong pseudoprime to bases 2, 3, 5, 7
        (3825123056546413051, False),  # strong pseudoprime to bases up to 23
        (2**61 - 1, True),
        (2**64 - 59, True),  # largest 64-bit prime
        (2**64 + 13, True),
        (2**89 - 1, True),
        ((2**61 - 1) * (2**31 - 1), False),
    ],
)
def test_is_prime_large(n, expected):
    assert is_prime(n) is expected
    assert is_prime(n, seed=7) is expected


def test_sieve_and_stream_agree_with_trial_division():
    assert sieve(10_000).tolist() == PRIMES_1E4
    assert list(primes_in_class(10_000, 0, 1)) == PRIMES_1E4


@pytest.mark.parametrize(
    "args, expected",
    [((30, 1, 4), [5, 13, 17, 29]), ((30, 3, 4), [3, 7, 11, 19, 23]), ((2, 1, 4), [])],
)
def test_primes_in_class_examples(args, expected):
    assert list(primes_in_class(*args)) == expected
    assert primes_td(*args) == expected


def test_primes_in_class_crosses_segments():
    # limit larger than one sieve segment
    got = list(primes_in_class(3_000_000, 7, 10))
    ref = [p for p in sieve(3_000_000).tolist() if p % 10 == 7]
    assert got == ref


def test_primes_in_class_domain():
    with pytest.raises(DomainError):
        list(primes_in_class(10, 4, 4))
    with pytest.raises(DomainError):
        list(primes_in_class(10, 0, 0))


@pytest.mark.parametrize("args, expected", [((4, 5), 4), ((6, 13), 5), ((0, 7), 1)])
def test_factorial_mod_examples(args, expected):
    assert factorial_mod(*args) == expected
    assert factorial_direct(*args) == expected


@pytest.mark.parametrize("n", [0, 1, 2, 3, 10, 500])
def test_factorial_mod_op_count(n):
    c = OpCounter()
    assert factorial_mod(n, 1_000_003, c) == factorial_direct(n, 1_000_003)
    assert c.mults == max(n - 1, 0)


def test_factorial_mod_zero_modulus():
    with pytest.raises(DomainError):
        factorial_mod(3, 0)


def test_wilson_theorem():
    for p in PRIMES_1E4:
        assert factorial_mod(p - 1, p) == p - 1


@pytest.mark.parametrize("p, expected", [(5, 2), (13, 5), (17, 13)])
def test_wilson_root_examples(p, expected):
    assert wilson_sqrt_minus_one(p) == expected == factorial_direct((p - 1) // 2, p)


@pytest.mark.parametrize("p", [3, 7, 21, 25])
def test_wilson_root_domain(p):
    with pytest.raises(DomainError):
        wilson_sqrt_minus_one(p)


def test_wilson_root_squares_to_minus_one_and_agrees_with_tonelli():
    for p in P4M1_1E4:
        w = wilson_sqrt_minus_one(p)
        assert 0 < w < p
        assert w * w % p == p - 1
        assert w in sqrt_mod_prime(p - 1, p)


@pytest.mark.parametrize("args, expected", [((4, 5), (2, 3)), ((12, 13), (5, 8)), ((2, 5), None)])
def test_sqrt_mod_prime_examples(args, expected):
    assert sqrt_mod_prime(*args) == expected
    assert (sqrt_enum(*args) or None) == (list(expected) if expected else None)


def test_sqrt_mod_prime_exhaustive_small():
    for p in [2] + [p for p in PRIMES_1E4 if p <= 400]:
        for a in range(p):
            roots = sqrt_mod_prime(a, p)
            ref = sqrt_enum(a, p) if a else []
            if not ref:
                assert roots is None
            else:
                assert list(roots) == [ref[0], ref[-1]]


@settings(max_examples=200)
@given(st.sampled_from(sieve(10**7)[-2000:].tolist()), st.integers(1, 10**7))
def test_sqrt_mod_prime_roots_square_back(p, x):
    a = x * x % p
    if a == 0:
        return
    lo, hi = sqrt_mod_prime(a, p)
    assert lo + hi == p and lo <= hi
    assert lo * lo % p == a


@pytest.mark.parametrize("args, expected", [((4, 5), 1), ((0, 7), 0), ((2, 5), -1)])
def test_legendre_examples(args, expected):
    assert legendre_symbol(*args) == expected


def test_legendre_rejects_two():
    with pytest.raises(DomainError):
        legendre_symbol(1, 2)


def test_legendre_one_iff_root_exists():
    for p in [p for p in PRIMES_1E4 if 2 < p <= 541]:
        for a in range(p):
            assert (legendre_symbol(a, p) == 1) == (sqrt_mod_prime(a, p) is not None)
            assert (legendre_symbol(a, p) == 1) == bool(a and sqrt_enum(a, p))
