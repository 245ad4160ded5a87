"""Euler's totient, the reduced residue system, and multiplicative order."""

from __future__ import annotations

import math
from dataclasses import dataclass

from .arith import mod_pow
from .errors import DomainError, check_enumeration
from .factoring import divisors, factorize


@dataclass(frozen=True)
class PhiSet:
    """The integers in [1, n] coprime to n, in increasing order."""

    n: int
    members: tuple[int, ...]


def phi(n: int, *, deadline: float | None = None) -> int:
    """Count of integers in [1, n] coprime to n.

    Computed from the factorization as the product of p**(a-1) * (p-1),
    which keeps everything in integers.
    """
    out = 1
    for p, a in factorize(n, deadline=deadline).factors:
        out *= p ** (a - 1) * (p - 1)
    return out


def phi_set(n: int, limit: int | None = None) -> PhiSet:
    """Enumerate the reduced residue system modulo n (n = 1 gives {1})."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    check_enumeration(n, limit)
    return PhiSet(n, tuple(m for m in range(1, n + 1) if math.gcd(m, n) == 1))


def multiplicative_order(m: int, n: int) -> int:
    """Smallest t >= 1 with m**t = 1 (mod n); requires gcd(m, n) = 1 and n >= 2.

    Searches the divisors of phi(n) in increasing order instead of stepping
    through powers one at a time.
    """
    if n < 2:
        raise DomainError(f"need n >= 2, got {n}")
    if math.gcd(m, n) != 1:
        raise DomainError(f"order of {m} modulo {n} undefined: gcd is {math.gcd(m, n)}")
    group_order = phi(n)
    for t in divisors(group_order):
        if mod_pow(m, t, n) == 1:
            return t
    raise AssertionError("unreachable: t = phi(n) always satisfies m**t = 1")
