"""Exact arithmetic primitives on arbitrary-precision non-negative integers."""

from __future__ import annotations

import math
from typing import NamedTuple

from .errors import DomainError


class DivRem(NamedTuple):
    quotient: int
    remainder: int


def _natural(name: str, value: int) -> int:
    if not isinstance(value, int) or isinstance(value, bool):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < 0:
        raise DomainError(f"{name} must be non-negative, got {value}")
    return value


def div_rem(a: int, b: int) -> DivRem:
    """Quotient and remainder with a = b*q + r and 0 <= r < b."""
    _natural("a", a)
    _natural("b", b)
    if b == 0:
        raise DomainError("division by zero")
    q, r = divmod(a, b)
    return DivRem(q, r)


def gcd(a: int, b: int) -> int:
    """Greatest common divisor; gcd(0, n) = n, gcd(0, 0) is undefined."""
    _natural("a", a)
    _natural("b", b)
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    return math.gcd(a, b)


def ext_gcd(a: int, b: int) -> tuple[int, int, int]:
    """Return (g, x, y) with g = gcd(a, b) and a*x + b*y = g."""
    _natural("a", a)
    _natural("b", b)
    if a == 0 and b == 0:
        raise DomainError("gcd(0, 0) is undefined")
    old_r, r = a, b
    old_x, x = 1, 0
    old_y, y = 0, 1
    while r != 0:
        q = old_r // r
        old_r, r = r, old_r - q * r
        old_x, x = x, old_x - q * x
        old_y, y = y, old_y - q * y
    return old_r, old_x, old_y


def mod_inv(a: int, n: int) -> int:
    """The unique d in [1, n) with a*d = 1 (mod n); requires gcd(a, n) = 1."""
    _natural("a", a)
    _natural("n", n)
    if n < 2:
        raise DomainError(f"modulus must be >= 2, got {n}")
    g, x, _ = ext_gcd(a % n, n)
    if g != 1:
        raise DomainError(f"{a} is not invertible modulo {n} (gcd = {g})")
    return x % n


def mod_pow(base: int, exp: int, modulus: int) -> int:
    """base**exp mod modulus via binary exponentiation; exp = 0 gives 1 mod modulus."""
    _natural("base", base)
    _natural("exp", exp)
    _natural("modulus", modulus)
    if modulus == 0:
        raise DomainError("modulus must be >= 1")
    return pow(base, exp, modulus)


def is_congruent(a: int, b: int, n: int) -> bool:
    """True iff n divides a - b."""
    _natural("a", a)
    _natural("b", b)
    _natural("n", n)
    if n == 0:
        raise DomainError("modulus must be >= 1")
    return (a - b) % n == 0
