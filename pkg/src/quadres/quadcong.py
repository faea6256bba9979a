"""The quadratic congruence decision problem.

Given ``(a, b, c)``: is there a positive integer ``x < c`` with
``x**2 == a (mod b)``?  A certificate is any such ``x``; checking one costs a
single modular squaring, finding one is what :func:`decide` and
:func:`brute_force` do.

Candidates are only scanned in ``1 .. min(c, b) - 1``. Squares repeat with
period ``b``, so a witness ``x >= b`` always reduces to a smaller one, except
for ``x = b`` itself when ``a == 0``; that case is handled explicitly.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, Optional

import numpy as np

from .modmath import DomainError, is_prime, require_prime_4m1, sqrt_mod_prime, wilson_sqrt_minus_one

__all__ = [
    "QCInstance",
    "QCVerdict",
    "verify_certificate",
    "decide",
    "brute_force",
    "solve_wilson_instance",
    "parse_instances",
    "format_instance",
]


@dataclass(frozen=True)
class QCInstance:
    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.b < 2:
            raise DomainError(f"modulus b must be >= 2, got {self.b}")
        if self.c < 1:
            raise DomainError(f"bound c must be >= 1, got {self.c}")
        object.__setattr__(self, "a", self.a % self.b)


@dataclass(frozen=True)
class QCVerdict:
    satisfiable: bool
    witness: Optional[int] = None

    def __post_init__(self) -> None:
        if self.satisfiable != (self.witness is not None):
            raise ValueError("a verdict is satisfiable exactly when it carries a witness")


UNSAT = QCVerdict(False)


def verify_certificate(inst: QCInstance, x: int) -> bool:
    """The polynomial-time verifier: ``0 < x < c`` and ``x*x % b == a``."""
    return 0 < x < inst.c and x * x % inst.b == inst.a


def _zero_fallback(inst: QCInstance) -> QCVerdict:
    # x = b squares to 0 and lies outside the residue scan
    if inst.a == 0 and inst.c > inst.b:
        return QCVerdict(True, inst.b)
    return UNSAT


def decide(inst: QCInstance) -> QCVerdict:
    """Decide the instance and return the smallest witness if there is one.

    Prime moduli go through Tonelli-Shanks (two candidate roots); composite
    moduli fall back to :func:`brute_force`.
    """
    a, b, c = inst.a, inst.b, inst.c
    if not is_prime(b):
        return brute_force(inst)[0]
    if a == 0:
        return _zero_fallback(inst)
    roots = sqrt_mod_prime(a, b)
    if roots is None or roots[0] >= c:
        return UNSAT
    return QCVerdict(True, roots[0])


_CHUNK = 1 << 14
_SMALL_SCAN = 256
# x*x must fit in int64 for the vectorised scan
_NUMPY_MAX_MODULUS = 3_000_000_000


def _first_hit(a: int, b: int, hi: int) -> Optional[int]:
    if hi <= _SMALL_SCAN or b > _NUMPY_MAX_MODULUS:
        for x in range(1, hi):
            if x * x % b == a:
                return x
        return None
    for lo in range(1, hi, _CHUNK):
        xs = np.arange(lo, min(lo + _CHUNK, hi), dtype=np.int64)
        hits = np.flatnonzero(xs * xs % b == a)
        if hits.size:
            return lo + int(hits[0])
    return None


def brute_force(inst: QCInstance) -> tuple[QCVerdict, int]:
    """Exhaustive ascending scan over ``x = 1, 2, ..., min(c, b) - 1``.

    Returns:
        ``(verdict, visited)`` where ``visited`` is the number of candidates a
        sequential scan tests before stopping: the witness value on success,
        ``min(c, b) - 1`` on failure.
    """
    hi = min(inst.c, inst.b)
    w = _first_hit(inst.a, inst.b, hi)
    if w is not None:
        return QCVerdict(True, w), w
    verdict = _zero_fallback(inst)
    if verdict.satisfiable:
        return verdict, inst.b
    return verdict, max(hi - 1, 0)


def solve_wilson_instance(p: int) -> QCVerdict:
    """Solve ``x**2 == -1 (mod p)`` for ``p = 4m+1`` through the half factorial."""
    require_prime_4m1(p)
    w = wilson_sqrt_minus_one(p)
    return QCVerdict(True, min(w, p - w))


def parse_instances(lines: Iterable[str]) -> Iterator[QCInstance]:
    """Read ``a b c`` lines (decimal, whitespace separated); blank lines and
    ``#`` comments are skipped."""
    for lineno, line in enumerate(lines, 1):
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        fields = line.split()
        if len(fields) != 3:
            raise DomainError(f"line {lineno}: expected 'a b c', got {line!r}")
        try:
            a, b, c = (int(f) for f in fields)
        except ValueError:
            raise DomainError(f"line {lineno}: non-integer field in {line!r}") from None
        yield QCInstance(a, b, c)


def format_instance(inst: QCInstance) -> str:
    return f"{inst.a} {inst.b} {inst.c}"
