"""Primality testing and unique factorization into prime powers.

Small inputs go through trial division; larger ones through a strong
pseudoprime test with fixed witnesses (exact below 3.317e24, and with no
known failures above it) plus Brent's cycle-finding variant of Pollard rho.
Factoring a large semiprime is slow by nature; callers that cannot wait
pass a deadline and get a FactorizationTimeout instead of a wrong answer.
"""

from __future__ import annotations

import math
import random
import time
from dataclasses import dataclass

from .errors import DomainError, FactorizationTimeout

DEFAULT_RHO_SEED = 0x5EED

# Exact for every n below 3,317,044,064,679,887,385,961,981.
_MR_BASES = (2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41)
# Extra fixed witnesses applied beyond the proven range; deterministic,
# and no composite passing them is known.
_MR_EXTRA_BASES = (43, 47, 53, 59, 61, 67, 71, 73, 79, 83, 89, 97)

_TRIAL_BOUND = 10_000


def _small_primes(bound: int) -> tuple[int, ...]:
    sieve = bytearray([1]) * (bound + 1)
    sieve[0] = sieve[1] = 0
    for p in range(2, math.isqrt(bound) + 1):
        if sieve[p]:
            sieve[p * p :: p] = bytearray(len(sieve[p * p :: p]))
    return tuple(i for i, flag in enumerate(sieve) if flag)


_SMALL_PRIMES = _small_primes(_TRIAL_BOUND)
_SMALL_PRIME_SET = frozenset(_SMALL_PRIMES)


@dataclass(frozen=True)
class Factorization:
    """n as an ordered product of prime powers; n = 1 is the empty product."""

    n: int
    factors: tuple[tuple[int, int], ...]

    def reconstruct(self) -> int:
        out = 1
        for p, a in self.factors:
            out *= p**a
        return out

    def primes(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self.factors)


def _strong_probable_prime(n: int, base: int) -> bool:
    base %= n
    if base <= 1:
        return True
    d = n - 1
    s = (d & -d).bit_length() - 1
    d >>= s
    x = pow(base, d, n)
    if x == 1 or x == n - 1:
        return True
    for _ in range(s - 1):
        x = x * x % n
        if x == n - 1:
            return True
    return False


def is_prime(n: int) -> bool:
    """Deterministic primality test."""
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"n must be an integer, got {n!r}")
    if n < 2:
        return False
    if n <= _TRIAL_BOUND:
        return n in _SMALL_PRIME_SET
    for p in _SMALL_PRIMES[:32]:
        if n % p == 0:
            return False
    bases = _MR_BASES
    if n >= 3_317_044_064_679_887_385_961_981:
        bases = _MR_BASES + _MR_EXTRA_BASES
    return all(_strong_probable_prime(n, b) for b in bases)


def _check_deadline(deadline: float | None, n: int) -> None:
    if deadline is not None and time.monotonic() > deadline:
        raise FactorizationTimeout(f"factoring {n} exceeded the deadline")


def _pollard_rho(n: int, rng: random.Random, deadline: float | None) -> int:
    """A nontrivial divisor of an odd composite n, by Brent's cycle search."""
    while True:
        y = rng.randrange(1, n)
        c = rng.randrange(1, n)
        m = 128
        g = r = q = 1
        x = ys = y
        while g == 1:
            _check_deadline(deadline, n)
            x = y
            for _ in range(r):
                y = (y * y + c) % n
            k = 0
            while k < r and g == 1:
                _check_deadline(deadline, n)
                ys = y
                for _ in range(min(m, r - k)):
                    y = (y * y + c) % n
                    q = q * abs(x - y) % n
                g = math.gcd(q, n)
                k += m
            r <<= 1
        if g == n:
            # Batch gcd overshot; replay one step at a time.
            g = 1
            while g == 1:
                _check_deadline(deadline, n)
                ys = (ys * ys + c) % n
                g = math.gcd(abs(x - ys), n)
        if g != n:
            return g


def factorize(n: int, *, seed: int = DEFAULT_RHO_SEED, deadline: float | None = None) -> Factorization:
    """Factor n >= 1 into strictly increasing prime powers.

    The rho stage draws its polynomial parameters from `seed`, so repeated
    calls with the same arguments produce identical work and results.
    `deadline` is an absolute time.monotonic() value.
    """
    if not isinstance(n, int) or isinstance(n, bool):
        raise DomainError(f"n must be an integer, got {n!r}")
    if n < 1:
        raise DomainError(f"cannot factor {n}; need n >= 1")
    counts: dict[int, int] = {}
    rest = n
    for p in _SMALL_PRIMES:
        if p * p > rest:
            break
        while rest % p == 0:
            counts[p] = counts.get(p, 0) + 1
            rest //= p
    if 1 < rest <= _TRIAL_BOUND * _TRIAL_BOUND:
        # Trial division reached sqrt(rest), so what is left is prime.
        counts[rest] = counts.get(rest, 0) + 1
    elif rest > 1:
        rng = random.Random(seed)
        stack = [rest]
        while stack:
            _check_deadline(deadline, n)
            v = stack.pop()
            if is_prime(v):
                counts[v] = counts.get(v, 0) + 1
                continue
            d = _pollard_rho(v, rng, deadline)
            stack.append(d)
            stack.append(v // d)
    return Factorization(n, tuple(sorted(counts.items())))


def is_squarefree(n: int, *, deadline: float | None = None) -> bool:
    """True iff no prime divides n more than once."""
    return all(a == 1 for _, a in factorize(n, deadline=deadline).factors)


def divisors(n: int, *, deadline: float | None = None) -> list[int]:
    """All positive divisors of n in increasing order."""
    out = [1]
    for p, a in factorize(n, deadline=deadline).factors:
        powers = [p**i for i in range(1, a + 1)]
        out += [d * pp for d in out for pp in powers]
    out.sort()
    return out


def gen_prime(bits: int, rng: random.Random) -> int:
    """A random prime with exactly `bits` bits, drawn from `rng`."""
    if bits < 2:
        raise DomainError("need bits >= 2")
    while True:
        candidate = rng.getrandbits(bits) | (1 << (bits - 1)) | 1
        if is_prime(candidate):
            return candidate
