"""RSA-style encryption over an arbitrary modulus.

Keys only require e*d = 1 (mod phi(n)); nothing about n being a semiprime.
Messages live in [1, n], with m = n encoding to residue 0, and the round-trip
comparison is modular so that case still counts as recovered. No padding, no
security: the point is the arithmetic of which messages survive.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from pathlib import Path

import numpy as np

from .arith import is_congruent, mod_inv
from .bigphi import membership_mask
from .errors import CapacityError, DomainError, FactorizationTimeout, check_enumeration
from .totient import phi

# Largest modulus whose squares stay exact in the vectorized int64 path.
_INT64_SAFE_MODULUS = math.isqrt(2**63 - 1)


@dataclass(frozen=True)
class KeyPair:
    """Modulus, totient, exponent pair, and the witness k with e*d = k*phi_n + 1."""

    n: int
    phi_n: int
    e: int
    d: int
    k: int

    @property
    def is_identity(self) -> bool:
        """e = 1 keys encrypt to the message itself; legal but degenerate."""
        return self.e == 1


def make_keypair(n: int, e: int, *, phi_n: int | None = None, deadline: float | None = None) -> KeyPair:
    """Build a key for modulus n and public exponent e.

    phi(n) is computed by factoring n unless the caller already knows it
    (for example having built n from known primes); d is stored as the
    minimal positive inverse of e.
    """
    if n < 3:
        raise DomainError(f"modulus too small: need n >= 3, got {n}")
    if phi_n is None:
        try:
            phi_n = phi(n, deadline=deadline)
        except FactorizationTimeout as exc:
            raise FactorizationTimeout(f"cannot compute phi({n}): {exc}") from exc
    if phi_n <= 1:
        raise DomainError(f"modulus too small: phi({n}) = {phi_n} leaves no valid exponent")
    if not 1 <= e < phi_n:
        raise DomainError(f"invalid exponent: need 1 <= e < {phi_n}, got {e}")
    if math.gcd(e, phi_n) != 1:
        raise DomainError(f"invalid exponent: gcd({e}, {phi_n}) = {math.gcd(e, phi_n)} != 1")
    d = mod_inv(e, phi_n)
    k = (e * d - 1) // phi_n
    return KeyPair(n, phi_n, e, d, k)


def _check_message(key: KeyPair, m: int) -> None:
    if not 1 <= m <= key.n:
        raise DomainError(f"message out of range: need 1 <= m <= {key.n}, got {m}")


def encrypt(key: KeyPair, m: int) -> int:
    """m**e mod n for m in [1, n]; m = n maps to residue 0."""
    _check_message(key, m)
    return pow(m % key.n, key.e, key.n)


def decrypt(key: KeyPair, c: int) -> int:
    """c**d mod n for a ciphertext residue c in [0, n)."""
    if not 0 <= c < key.n:
        raise DomainError(f"ciphertext out of range: need 0 <= c < {key.n}, got {c}")
    return pow(c, key.d, key.n)


def roundtrip_ok(key: KeyPair, m: int) -> bool:
    """True iff decrypt(encrypt(m)) = m (mod n)."""
    _check_message(key, m)
    return is_congruent(decrypt(key, encrypt(key, m)), m, key.n)


def _pow_mod_vec(values: np.ndarray, exp: int, modulus: int) -> np.ndarray:
    """Square-and-multiply on an int64 vector; modulus**2 must fit in int64."""
    result = np.ones_like(values)
    base = values % modulus
    while exp:
        if exp & 1:
            result = result * base % modulus
        base = base * base % modulus
        exp >>= 1
    return result


def decrypted_all(key: KeyPair, limit: int | None = None) -> np.ndarray:
    """decrypt(encrypt(m)) for every m in [1, n], as an array indexed by m - 1."""
    check_enumeration(key.n, limit)
    if key.n > _INT64_SAFE_MODULUS:
        raise CapacityError(f"modulus {key.n} is too large for exact vectorized enumeration")
    messages = np.arange(1, key.n + 1, dtype=np.int64)
    return _pow_mod_vec(_pow_mod_vec(messages, key.e, key.n), key.d, key.n)


def roundtrip_mask(key: KeyPair, limit: int | None = None) -> np.ndarray:
    """Boolean mask over [0, n]: mask[m] = roundtrip_ok(key, m) (mask[0] unused)."""
    out = decrypted_all(key, limit)
    messages = np.arange(1, key.n + 1, dtype=np.int64)
    mask = np.zeros(key.n + 1, dtype=bool)
    mask[1:] = out == messages % key.n
    return mask


@dataclass(frozen=True)
class CorrectnessReport:
    """Which messages round-trip under a key, against the membership set."""

    key: KeyPair
    correct_set: tuple[int, ...]
    phi_set_equal: bool
    failures: tuple[tuple[int, int], ...]


def correctness_set(key: KeyPair, limit: int | None = None) -> CorrectnessReport:
    """Classify every m in [1, n] by whether it round-trips.

    failures pairs each non-recovered m with the value it decrypts to;
    phi_set_equal records whether the recovered set coincides exactly with
    the membership set of n.
    """
    decrypted = decrypted_all(key, limit)
    messages = np.arange(1, key.n + 1, dtype=np.int64)
    ok = decrypted == messages % key.n
    correct = tuple(int(m) for m in messages[ok])
    failures = tuple((int(m), int(v)) for m, v in zip(messages[~ok], decrypted[~ok]))
    members = membership_mask(key.n, limit)
    equal = bool(np.array_equal(np.nonzero(members)[0], messages[ok]))
    return CorrectnessReport(key, correct, equal, failures)


def save_keyfile(key: KeyPair, path: str | Path) -> None:
    """Write the three decimal lines n, e, d."""
    Path(path).write_text(format_keyfile(key), encoding="ascii")


def format_keyfile(key: KeyPair) -> str:
    return f"{key.n}\n{key.e}\n{key.d}\n"


def parse_keyfile(text: str) -> tuple[int, int, int]:
    lines = [line.strip() for line in text.splitlines() if line.strip()]
    if len(lines) != 3:
        raise DomainError(f"key file must hold exactly three decimal lines n, e, d; got {len(lines)}")
    try:
        n, e, d = (int(line, 10) for line in lines)
    except ValueError as exc:
        raise DomainError(f"key file holds a non-decimal line: {exc}") from exc
    return n, e, d


def load_keyfile(path: str | Path, *, deadline: float | None = None) -> KeyPair:
    """Read n, e, d; recompute phi(n) and k, and revalidate the key.

    Any d in the right congruence class is accepted; the returned key stores
    the minimal positive representative.
    """
    n, e, d = parse_keyfile(Path(path).read_text(encoding="ascii"))
    return import_key(n, e, d, deadline=deadline)


def import_key(n: int, e: int, d: int, *, deadline: float | None = None) -> KeyPair:
    if n < 3:
        raise DomainError(f"modulus too small: need n >= 3, got {n}")
    if d < 1:
        raise DomainError(f"invalid private exponent: need d >= 1, got {d}")
    phi_n = phi(n, deadline=deadline)
    key = make_keypair(n, e, phi_n=phi_n)
    if not is_congruent(e * d, 1, phi_n):
        raise DomainError(f"invalid key: {e} * {d} is not 1 modulo phi({n}) = {phi_n}")
    return key
