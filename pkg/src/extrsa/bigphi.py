"""Membership, enumeration, and counting for the extended residue set.

An integer m in [1, n] belongs to the set when, with P = gcd(m, n) and
Q = n / P, the two parts are coprime. Every residue coprime to n qualifies
(P = 1), so this is a superset of the reduced residue system; for squarefree
n it is all of [1, n].

Two independent routes are kept side by side on purpose:

* the definitional scan (`phi_membership`, `membership_mask`,
  `big_phi_set`, `big_phi_count_by_enumeration`), which never factors n;
* the closed-form count (`big_phi_count`), which only factors n.

Tests and the verification harness hold the two routes against each other.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .errors import DomainError, check_enumeration
from .factoring import factorize


@dataclass(frozen=True)
class PhiMembershipWitness:
    """The split n = p_part * q_part that decides membership of m."""

    m: int
    n: int
    p_part: int
    q_part: int
    is_member: bool


@dataclass(frozen=True)
class BigPhiSet:
    n: int
    members: tuple[int, ...]


def phi_membership(m: int, n: int) -> PhiMembershipWitness:
    """Decide membership of m in [1, n] and return the witness split."""
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    if not 1 <= m <= n:
        raise DomainError(f"need 1 <= m <= {n}, got {m}")
    p_part = math.gcd(m, n)
    q_part = n // p_part
    return PhiMembershipWitness(m, n, p_part, q_part, math.gcd(p_part, q_part) == 1)


def _divisors_by_trial(n: int) -> list[int]:
    # Trial division on purpose: keeps this path independent of factorize().
    small, large = [], []
    for d in range(1, math.isqrt(n) + 1):
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
    return small + large[::-1]


def membership_mask(n: int, limit: int | None = None) -> np.ndarray:
    """Boolean mask over [0, n] with mask[m] = membership of m (mask[0] unused).

    gcd(m, n) is the largest divisor of n dividing m, so writing the verdict
    for each divisor d of n over the slice d::d in increasing order leaves
    every m holding the verdict of its actual gcd.
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    check_enumeration(n, limit)
    mask = np.zeros(n + 1, dtype=bool)
    for d in _divisors_by_trial(n):
        mask[d::d] = math.gcd(d, n // d) == 1
    return mask


def big_phi_set(n: int, limit: int | None = None) -> BigPhiSet:
    """Enumerate the full membership list for n."""
    mask = membership_mask(n, limit)
    return BigPhiSet(n, tuple(int(m) for m in np.nonzero(mask)[0]))


def big_phi_count_by_enumeration(n: int, limit: int | None = None) -> int:
    """Membership count by definitional scan; the oracle for big_phi_count."""
    return int(np.count_nonzero(membership_mask(n, limit)))


def big_phi_count(n: int, *, deadline: float | None = None) -> int:
    """Membership count from the factorization of n, without enumeration.

    m qualifies exactly when, for every prime power p**a in n, either p does
    not divide m or p**a does. Modulo p**a that leaves the p**a - p**(a-1)
    residues not divisible by p plus the single residue 0, and the counts
    multiply across the pairwise-coprime prime powers, giving

        product over p**a of (p**a - p**(a-1) + 1).

    For squarefree n every factor collapses to p, so the count is n itself.
    """
    if n < 1:
        raise DomainError(f"need n >= 1, got {n}")
    out = 1
    for p, a in factorize(n, deadline=deadline).factors:
        pa = p**a
        out *= pa - pa // p + 1
    return out
