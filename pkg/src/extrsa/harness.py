"""Batch verification: worked-example reproduction, theorem suites, and the
necessity sweep.

The sweep asks, for every modulus in range and every valid public exponent,
whether the set of recovered messages is exactly the membership set. A
message that is recovered while sitting outside the set would refute the
necessity conjecture and is reported as a counterexample; a member that is
NOT recovered would contradict the proven sufficiency theorem, so it aborts
the run as an internal bug instead of becoming data.
"""

from __future__ import annotations

import math
import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from . import arith, bigphi, rsa, totient
from .errors import DomainError, InternalConsistencyError, check_enumeration
from .factoring import factorize, is_squarefree

DIRECTION_EXTRA = "correct-but-not-member"
DIRECTION_IMPOSSIBLE = "member-but-incorrect"


def valid_exponents(phi_n: int, include_identity: bool = False) -> list[int]:
    """Exponents e with 1 <= e < phi_n and gcd(e, phi_n) = 1; e = 1 optional."""
    start = 1 if include_identity else 2
    return [e for e in range(start, phi_n) if math.gcd(e, phi_n) == 1]


# ---------------------------------------------------------------------------
# Conjecture sweep
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class SweepConfig:
    n_min: int
    n_max: int
    e_policy: str = "all-valid"  # all-valid | first-valid | sample
    sample_count: int = 8
    sample_seed: int = 0
    exclude_e1: bool = True
    parallelism: int = 1

    def __post_init__(self) -> None:
        if not 3 <= self.n_min <= self.n_max:
            raise DomainError(f"need 3 <= n_min <= n_max, got [{self.n_min}, {self.n_max}]")
        if self.e_policy not in ("all-valid", "first-valid", "sample"):
            raise DomainError(f"unknown e policy {self.e_policy!r}")
        if self.sample_count < 1:
            raise DomainError("sample_count must be >= 1")
        if self.parallelism < 1:
            raise DomainError("parallelism must be >= 1")


@dataclass(frozen=True)
class Counterexample:
    n: int
    e: int
    m: int
    direction: str


@dataclass(frozen=True)
class ConjectureReport:
    config: SweepConfig
    pairs_checked: int
    counterexamples: tuple[Counterexample, ...]
    elapsed: float


def _exponents_for(config: SweepConfig, n: int, phi_n: int) -> list[int]:
    es = valid_exponents(phi_n, include_identity=not config.exclude_e1)
    if config.e_policy == "first-valid":
        return es[:1]
    if config.e_policy == "sample" and len(es) > config.sample_count:
        rng = random.Random(f"{config.sample_seed}:{n}")
        return sorted(rng.sample(es, config.sample_count))
    return es


def _sweep_single_n(config: SweepConfig, n: int) -> tuple[int, list[Counterexample]]:
    """Check every selected exponent for one modulus; raises on a sufficiency breach."""
    phi_n = totient.phi(n)
    members = bigphi.membership_mask(n, limit=n)
    found: list[Counterexample] = []
    pairs = 0
    for e in _exponents_for(config, n, phi_n):
        key = rsa.make_keypair(n, e, phi_n=phi_n)
        ok = rsa.roundtrip_mask(key, limit=n)
        pairs += 1
        impossible = members & ~ok
        if impossible.any():
            m = int(np.nonzero(impossible)[0][0])
            raise InternalConsistencyError(
                f"member {m} of the membership set failed to round-trip for "
                f"n={n}, e={e}: this contradicts the sufficiency theorem"
            )
        for m in np.nonzero(ok & ~members)[0]:
            found.append(Counterexample(n, e, int(m), DIRECTION_EXTRA))
    return pairs, found


def _sweep_worker(args: tuple[SweepConfig, int]) -> tuple[int, list[Counterexample]]:
    return _sweep_single_n(*args)


def sweep_conjecture(config: SweepConfig, limit: int | None = None) -> ConjectureReport:
    """Run the necessity sweep over [n_min, n_max] under the given policy.

    Deterministic for a fixed config (including the sample seed) and
    independent of the parallelism degree: work is partitioned by n and
    merged back in n order.
    """
    check_enumeration(config.n_max, limit)
    started = time.perf_counter()
    ns = range(config.n_min, config.n_max + 1)
    if config.parallelism > 1:
        with ProcessPoolExecutor(max_workers=config.parallelism) as pool:
            chunk = max(1, len(ns) // (config.parallelism * 8))
            results = list(pool.map(_sweep_worker, [(config, n) for n in ns], chunksize=chunk))
    else:
        results = [_sweep_single_n(config, n) for n in ns]
    pairs = sum(p for p, _ in results)
    counterexamples = tuple(cx for _, found in results for cx in found)
    return ConjectureReport(config, pairs, counterexamples, time.perf_counter() - started)


# ---------------------------------------------------------------------------
# Worked-example reproduction
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ExampleAssertion:
    name: str
    expected: object
    actual: object

    @property
    def ok(self) -> bool:
        return self.expected == self.actual


@dataclass(frozen=True)
class ExamplesReport:
    assertions: tuple[ExampleAssertion, ...]

    @property
    def all_passed(self) -> bool:
        return all(a.ok for a in self.assertions)

    @property
    def failures(self) -> tuple[str, ...]:
        return tuple(a.name for a in self.assertions if not a.ok)


def reproduce_worked_examples(corrupt: dict[str, object] | None = None) -> ExamplesReport:
    """Recompute both worked examples (n = 10 and n = 20) value by value.

    `corrupt` substitutes fake actual values by assertion name; it exists so
    tests can prove a mismatch is caught and named.
    """
    corrupt = corrupt or {}
    assertions: list[ExampleAssertion] = []

    def record(name: str, expected: object, actual: object) -> None:
        assertions.append(ExampleAssertion(name, expected, corrupt.get(name, actual)))

    record("phi(10)", 4, totient.phi(10))
    record("phi-set(10)", (1, 3, 7, 9), totient.phi_set(10).members)
    record("membership-set(10)", tuple(range(1, 11)), bigphi.big_phi_set(10).members)
    key10 = rsa.make_keypair(10, 3)
    record("key(10,3): d is 7 modulo 4", True, arith.is_congruent(key10.d, 7, 4))
    record("key(10,3): e*d = k*phi + 1", key10.e * key10.d, key10.k * key10.phi_n + 1)
    record("key(10,3): all of [1,10] round-trips", (), tuple(m for m in range(1, 11) if not rsa.roundtrip_ok(key10, m)))

    record("phi(20)", 8, totient.phi(20))
    record("phi-set(20)", (1, 3, 7, 9, 11, 13, 17, 19), totient.phi_set(20).members)
    record(
        "membership-set(20)",
        (1, 3, 4, 5, 7, 8, 9, 11, 12, 13, 15, 16, 17, 19, 20),
        bigphi.big_phi_set(20).members,
    )
    key20 = rsa.make_keypair(20, 3)
    record("key(20,3): d", 3, key20.d)
    for m, expected in ((2, 12), (6, 16), (10, 0), (14, 4), (18, 8)):
        record(f"key(20,3): {m} decrypts to {expected}", expected, rsa.decrypt(key20, rsa.encrypt(key20, m)))
    report20 = rsa.correctness_set(key20)
    record("key(20,3): correct set equals membership set", True, report20.phi_set_equal)
    record("key(20,3): failure map", ((2, 12), (6, 16), (10, 0), (14, 4), (18, 8)), report20.failures)
    record(
        "key(20,3): every member round-trips",
        (),
        tuple(m for m in bigphi.big_phi_set(20).members if not rsa.roundtrip_ok(key20, m)),
    )

    return ExamplesReport(tuple(assertions))


# ---------------------------------------------------------------------------
# Theorem suite
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class TheoremCheck:
    name: str
    bound: int
    checked: int
    failures: tuple[tuple, ...] = ()

    @property
    def passed(self) -> bool:
        return not self.failures


@dataclass(frozen=True)
class TheoremSuiteReport:
    n_max: int
    checks: tuple[TheoremCheck, ...]

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)


_MAX_WITNESSES = 10


def _trim(failures: list[tuple]) -> tuple[tuple, ...]:
    return tuple(failures[:_MAX_WITNESSES])


def _divisor_table(bound: int) -> list[list[int]]:
    table: list[list[int]] = [[] for _ in range(bound + 1)]
    for d in range(1, bound + 1):
        for m in range(d, bound + 1, d):
            table[m].append(d)
    return table


def check_division_identity(bound: int) -> TheoremCheck:
    """a = b*q + r with 0 <= r < b, exhaustively for a, b up to the bound."""
    checked, failures = 0, []
    for b in range(1, bound + 1):
        for a in range(0, bound + 1):
            q, r = arith.div_rem(a, b)
            checked += 1
            if a != b * q + r or not 0 <= r < b:
                failures.append((a, b, q, r))
    return TheoremCheck("division-identity", bound, checked, _trim(failures))


def check_divisor_product(bound: int) -> TheoremCheck:
    """Coprime divisors a, b of N have a*b dividing N."""
    checked, failures = 0, []
    table = _divisor_table(bound)
    for n in range(1, bound + 1):
        divs = table[n]
        for i, a in enumerate(divs):
            for b in divs[i:]:
                if math.gcd(a, b) == 1:
                    checked += 1
                    if n % (a * b) != 0:
                        failures.append((n, a, b))
    return TheoremCheck("divisor-product", bound, checked, _trim(failures))


def check_coprime_divisors(bound: int) -> TheoremCheck:
    """Divisors of coprime P and Q are themselves coprime."""
    checked, failures = 0, []
    table = [np.array(ds, dtype=np.int64) for ds in _divisor_table(bound)]
    for p in range(1, bound + 1):
        for q in range(p, bound + 1):
            if math.gcd(p, q) != 1:
                continue
            grid = np.gcd.outer(table[p], table[q])
            checked += grid.size
            if not (grid == 1).all():
                bad = np.argwhere(grid != 1)[0]
                failures.append((p, q, int(table[p][bad[0]]), int(table[q][bad[1]])))
    return TheoremCheck("coprime-divisors", bound, checked, _trim(failures))


def check_gcd_product(bound: int) -> tuple[TheoremCheck, TheoremCheck]:
    """gcd(m, PQ) <= gcd(m, P) * gcd(m, Q), with equality when gcd(P, Q) = 1."""
    values = np.arange(1, bound + 1, dtype=np.int64)
    gcd_table = np.gcd.outer(values, values)  # gcd_table[i, j] = gcd(i+1, j+1)
    sub_checked = eq_checked = 0
    sub_failures, eq_failures = [], []
    for q in range(1, bound + 1):
        lhs = np.gcd(values[:, None], values[None, :] * q)  # rows m, cols P
        rhs = gcd_table * gcd_table[:, q - 1][:, None]
        sub_checked += lhs.size
        bad = lhs > rhs
        if bad.any():
            m_i, p_i = np.argwhere(bad)[0]
            sub_failures.append((int(values[m_i]), int(values[p_i]), q))
        coprime_cols = gcd_table[:, q - 1] == 1
        eq_checked += int(np.count_nonzero(coprime_cols)) * bound
        bad_eq = (lhs != rhs) & coprime_cols[None, :]
        if bad_eq.any():
            m_i, p_i = np.argwhere(bad_eq)[0]
            eq_failures.append((int(values[m_i]), int(values[p_i]), q))
    return (
        TheoremCheck("gcd-submultiplicative", bound, sub_checked, _trim(sub_failures)),
        TheoremCheck("gcd-multiplicative", bound, eq_checked, _trim(eq_failures)),
    )


def check_congruence_split(bound: int, samples_per_pair: int = 8, seed: int = 0) -> TheoremCheck:
    """a = b (mod PQ) iff a = b (mod P) and a = b (mod Q), for coprime P, Q.

    Congruence of a and b depends only on a - b, and divisibility is
    symmetric under negation, so quantifying over all pairs a, b <= PQ
    reduces exactly to scanning the differences 0 <= delta < PQ. A seeded
    handful of (a, b) pairs per (P, Q) additionally goes through
    is_congruent itself.
    """
    checked, failures = 0, []
    rng = random.Random(seed)
    for p in range(1, bound + 1):
        for q in range(p, bound + 1):
            if math.gcd(p, q) != 1:
                continue
            pq = p * q
            delta = np.arange(pq, dtype=np.int64)
            lhs = delta % pq == 0
            rhs = (delta % p == 0) & (delta % q == 0)
            checked += pq
            if not np.array_equal(lhs, rhs):
                d = int(np.nonzero(lhs != rhs)[0][0])
                failures.append((p, q, d))
            for _ in range(samples_per_pair):
                a, b = rng.randint(1, pq), rng.randint(1, pq)
                checked += 1
                if arith.is_congruent(a, b, pq) != (arith.is_congruent(a, b, p) and arith.is_congruent(a, b, q)):
                    failures.append((p, q, a, b))
    return TheoremCheck("congruence-split", bound, checked, _trim(failures))


def check_mod_inv_roundtrip(bound: int) -> TheoremCheck:
    """a * mod_inv(a, n) = 1 (mod n) for every a coprime to n."""
    checked, failures = 0, []
    for n in range(2, bound + 1):
        for a in range(1, n):
            if math.gcd(a, n) != 1:
                continue
            checked += 1
            if a * arith.mod_inv(a, n) % n != 1:
                failures.append((a, n))
    return TheoremCheck("modular-inverse-roundtrip", bound, checked, _trim(failures))


def check_mod_pow_oracle(bound: int) -> TheoremCheck:
    """mod_pow against an incremental repeated-multiplication oracle."""
    checked, failures = 0, []
    for modulus in range(1, bound + 1):
        for base in range(0, bound + 1):
            expected = 1 % modulus
            for exp in range(0, bound + 1):
                checked += 1
                if arith.mod_pow(base, exp, modulus) != expected:
                    failures.append((base, exp, modulus))
                expected = expected * base % modulus
    return TheoremCheck("modpow-naive-oracle", bound, checked, _trim(failures))


def check_totient_formula(bound: int) -> TheoremCheck:
    """Factorization-based phi against a direct coprimality scan."""
    checked, failures = 0, []
    values = np.arange(1, bound + 1, dtype=np.int64)
    for n in range(1, bound + 1):
        checked += 1
        scanned = int(np.count_nonzero(np.gcd(values[:n], n) == 1))
        if totient.phi(n) != scanned:
            failures.append((n, totient.phi(n), scanned))
    return TheoremCheck("totient-formula", bound, checked, _trim(failures))


def check_totient_distinct_primes(bound: int) -> TheoremCheck:
    """For squarefree n, phi(n) is the product of (p - 1) over its primes."""
    checked, failures = 0, []
    for n in range(1, bound + 1):
        factors = factorize(n).factors
        if any(a != 1 for _, a in factors):
            continue
        checked += 1
        expected = math.prod(p - 1 for p, _ in factors)
        if totient.phi(n) != expected:
            failures.append((n, totient.phi(n), expected))
    return TheoremCheck("totient-distinct-primes", bound, checked, _trim(failures))


def check_totient_multiplicative(bound: int) -> TheoremCheck:
    """phi(PQ) = phi(P) * phi(Q) for coprime P, Q with PQ within the bound."""
    checked, failures = 0, []
    table = [0] + [totient.phi(n) for n in range(1, bound + 1)]
    for p in range(1, bound + 1):
        for q in range(1, bound // p + 1):
            if math.gcd(p, q) != 1:
                continue
            checked += 1
            if table[p * q] != table[p] * table[q]:
                failures.append((p, q))
    return TheoremCheck("totient-multiplicative", bound, checked, _trim(failures))


def check_euler_theorem(bound: int) -> TheoremCheck:
    """m**phi(n) = 1 (mod n) for every m coprime to n."""
    checked, failures = 0, []
    for n in range(2, bound + 1):
        phi_n = totient.phi(n)
        for m in totient.phi_set(n).members:
            checked += 1
            if pow(m, phi_n, n) != 1:
                failures.append((m, n))
    return TheoremCheck("euler-theorem", bound, checked, _trim(failures))


def check_order_divides(bound: int) -> TheoremCheck:
    """The multiplicative order of every unit divides phi(n)."""
    checked, failures = 0, []
    for n in range(2, bound + 1):
        phi_n = totient.phi(n)
        for m in totient.phi_set(n).members:
            checked += 1
            if phi_n % totient.multiplicative_order(m, n) != 0:
                failures.append((m, n))
    return TheoremCheck("order-divides-totient", bound, checked, _trim(failures))


def check_membership_superset(bound: int) -> TheoremCheck:
    """Every residue coprime to n is a member, so the count dominates phi(n)."""
    checked, failures = 0, []
    values = np.arange(0, bound + 1, dtype=np.int64)
    for n in range(1, bound + 1):
        mask = bigphi.membership_mask(n, limit=bound)
        coprime = np.gcd(values[1 : n + 1], n) == 1
        checked += 1
        if not mask[1:][coprime].all() or int(np.count_nonzero(mask)) < int(np.count_nonzero(coprime)):
            failures.append((n,))
    return TheoremCheck("membership-superset", bound, checked, _trim(failures))


def check_squarefree_totality(bound: int) -> TheoremCheck:
    """For squarefree n the membership set is all of [1, n], and the fast count is n."""
    checked, failures = 0, []
    for n in range(1, bound + 1):
        if not is_squarefree(n):
            continue
        checked += 1
        if not bigphi.membership_mask(n, limit=bound)[1:].all() or bigphi.big_phi_count(n) != n:
            failures.append((n,))
    return TheoremCheck("squarefree-totality", bound, checked, _trim(failures))


def check_nonsquarefree_strict(bound: int) -> TheoremCheck:
    """For non-squarefree n the membership set misses at least one integer."""
    checked, failures = 0, []
    for n in range(1, bound + 1):
        if is_squarefree(n):
            continue
        checked += 1
        if bigphi.big_phi_count_by_enumeration(n, limit=bound) >= n:
            failures.append((n,))
    return TheoremCheck("nonsquarefree-strict", bound, checked, _trim(failures))


def check_member_coprime_quotient(bound: int) -> TheoremCheck:
    """Members m of the set for n satisfy gcd(m, n / gcd(m, n)) = 1."""
    checked, failures = 0, []
    for n in range(1, bound + 1):
        values = np.arange(1, n + 1, dtype=np.int64)
        g = np.gcd(values, n)
        q = n // g
        member = bigphi.membership_mask(n, limit=bound)[1:]
        checked += int(np.count_nonzero(member))
        if not (np.gcd(values[member], q[member]) == 1).all():
            m = int(values[member][np.gcd(values[member], q[member]) != 1][0])
            failures.append((n, m))
    return TheoremCheck("membership-coprime-quotient", bound, checked, _trim(failures))


def check_count_formula(bound: int) -> TheoremCheck:
    """Closed-form membership count against the definitional enumeration."""
    checked, failures = 0, []
    for n in range(1, bound + 1):
        checked += 1
        fast = bigphi.big_phi_count(n)
        slow = bigphi.big_phi_count_by_enumeration(n, limit=bound)
        if fast != slow:
            failures.append((n, fast, slow))
    return TheoremCheck("count-formula-vs-enumeration", bound, checked, _trim(failures))


def check_roundtrip_members(bound: int) -> tuple[TheoremCheck, TheoremCheck]:
    """Every member round-trips for every valid exponent; for squarefree n,
    every message does."""
    member_checked = sf_checked = 0
    member_failures, sf_failures = [], []
    for n in range(3, bound + 1):
        phi_n = totient.phi(n)
        members = bigphi.membership_mask(n, limit=bound)
        squarefree = is_squarefree(n)
        for e in valid_exponents(phi_n):
            key = rsa.make_keypair(n, e, phi_n=phi_n)
            ok = rsa.roundtrip_mask(key, limit=bound)
            member_checked += int(np.count_nonzero(members))
            bad = members & ~ok
            if bad.any():
                member_failures.append((n, e, int(np.nonzero(bad)[0][0])))
            if squarefree:
                sf_checked += n
                if not ok[1:].all():
                    sf_failures.append((n, e, int(np.nonzero(~ok[1:])[0][0]) + 1))
    return (
        TheoremCheck("roundtrip-on-members", bound, member_checked, _trim(member_failures)),
        TheoremCheck("roundtrip-squarefree-all", bound, sf_checked, _trim(sf_failures)),
    )


def check_per_factor_congruence(bound: int, samples_per_n: int = 5, seed: int = 0) -> TheoremCheck:
    """Recovered members agree with the original modulo both witness parts."""
    checked, failures = 0, []
    rng = random.Random(seed)
    for n in range(3, bound + 1):
        phi_n = totient.phi(n)
        es = valid_exponents(phi_n)
        if not es:
            continue
        key = rsa.make_keypair(n, es[0], phi_n=phi_n)
        members = bigphi.big_phi_set(n, limit=bound).members
        picks = members if len(members) <= samples_per_n else sorted(rng.sample(members, samples_per_n))
        for m in picks:
            witness = bigphi.phi_membership(m, n)
            recovered = rsa.decrypt(key, rsa.encrypt(key, m))
            checked += 1
            if not (
                arith.is_congruent(recovered, m, witness.p_part)
                and arith.is_congruent(recovered, m, witness.q_part)
            ):
                failures.append((n, key.e, m))
    return TheoremCheck("per-factor-congruence", bound, checked, _trim(failures))


# Stated verification ranges; verify_theorem_suite caps each at its n_max.
SUITE_BOUNDS = {
    "division-identity": 500,
    "divisor-product": 5000,
    "coprime-divisors": 500,
    "gcd-submultiplicative": 300,
    "gcd-multiplicative": 300,
    "congruence-split": 100,
    "modular-inverse-roundtrip": 1000,
    "modpow-naive-oracle": 50,
    "totient-formula": 5000,
    "totient-distinct-primes": 5000,
    "totient-multiplicative": 5000,
    "euler-theorem": 1000,
    "order-divides-totient": 500,
    "membership-superset": 5000,
    "squarefree-totality": 5000,
    "nonsquarefree-strict": 5000,
    "membership-coprime-quotient": 2000,
    "count-formula-vs-enumeration": 100000,
    "roundtrip-on-members": 1000,
    "roundtrip-squarefree-all": 1000,
    "per-factor-congruence": 1000,
}


def verify_theorem_suite(n_max: int = 5000) -> TheoremSuiteReport:
    """Run every quantified invariant check, each over [1, min(stated, n_max)]."""
    if n_max < 1:
        raise DomainError(f"need n_max >= 1, got {n_max}")

    def bound(name: str) -> int:
        return min(SUITE_BOUNDS[name], n_max)

    checks: list[TheoremCheck] = [
        check_division_identity(bound("division-identity")),
        check_divisor_product(bound("divisor-product")),
        check_coprime_divisors(bound("coprime-divisors")),
        *check_gcd_product(bound("gcd-submultiplicative")),
        check_congruence_split(bound("congruence-split")),
        check_mod_inv_roundtrip(bound("modular-inverse-roundtrip")),
        check_mod_pow_oracle(bound("modpow-naive-oracle")),
        check_totient_formula(bound("totient-formula")),
        check_totient_distinct_primes(bound("totient-distinct-primes")),
        check_totient_multiplicative(bound("totient-multiplicative")),
        check_euler_theorem(bound("euler-theorem")),
        check_order_divides(bound("order-divides-totient")),
        check_membership_superset(bound("membership-superset")),
        check_squarefree_totality(bound("squarefree-totality")),
        check_nonsquarefree_strict(bound("nonsquarefree-strict")),
        check_member_coprime_quotient(bound("membership-coprime-quotient")),
        check_count_formula(bound("count-formula-vs-enumeration")),
        *check_roundtrip_members(bound("roundtrip-on-members")),
        check_per_factor_congruence(bound("per-factor-congruence")),
    ]
    return TheoremSuiteReport(n_max, tuple(checks))
