"""Quadratic residues, two-square decompositions and Gaussian-prime censuses.

Submodules:

* :mod:`quadres.modmath` - modular arithmetic, primality, prime streams, Wilson roots
* :mod:`quadres.quadcong` - the quadratic congruence decision problem
* :mod:`quadres.twosquares` - ``p = s**2 + t**2`` for primes ``p = 4m+1``
* :mod:`quadres.gausscensus` - Gaussian primes by norm and by angular sector
* :mod:`quadres.lattice` - lattice points in and on circles
* :mod:`quadres.experiments` - uniformity statistics and cost benchmarks
* :mod:`quadres.export` - CSV / JSON writers
* :mod:`quadres.cli` - command line front end
"""

from .modmath import (
    DomainError,
    OpCounter,
    factorial_mod,
    is_prime,
    legendre_symbol,
    mod_pow,
    primes_in_class,
    sqrt_mod_prime,
    wilson_sqrt_minus_one,
)
from .quadcong import QCInstance, QCVerdict, brute_force, decide, solve_wilson_instance, verify_certificate
from .twosquares import TwoSquareDecomposition, decompose, decompose_brute, uniqueness_check, verify_congruence_form

__version__ = "0.1.0"

__all__ = [
    "DomainError",
    "OpCounter",
    "QCInstance",
    "QCVerdict",
    "TwoSquareDecomposition",
    "brute_force",
    "decide",
    "decompose",
    "decompose_brute",
    "factorial_mod",
    "is_prime",
    "legendre_symbol",
    "mod_pow",
    "primes_in_class",
    "solve_wilson_instance",
    "sqrt_mod_prime",
    "uniqueness_check",
    "verify_certificate",
    "verify_congruence_form",
    "wilson_sqrt_minus_one",
]
