"""Exception types and enumeration capacity policy shared across the package."""

from __future__ import annotations

import os

DEFAULT_ENUM_LIMIT = 10**6
ENUM_LIMIT_ENV = "EXTRSA_ENUM_LIMIT"


class DomainError(ValueError):
    """An argument is outside the mathematical domain of the operation."""


class CapacityError(ValueError):
    """A request would enumerate past the configured limit."""


class FactorizationTimeout(TimeoutError):
    """Factoring did not finish before the caller's deadline."""


class InternalConsistencyError(RuntimeError):
    """A result contradicts a proven theorem, which can only mean a bug."""


def enumeration_limit(limit: int | None = None) -> int:
    """Resolve the enumeration cap: explicit argument, then environment, then default."""
    if limit is not None:
        return limit
    raw = os.environ.get(ENUM_LIMIT_ENV)
    if raw:
        return int(raw)
    return DEFAULT_ENUM_LIMIT


def check_enumeration(n: int, limit: int | None = None) -> None:
    cap = enumeration_limit(limit)
    if n > cap:
        raise CapacityError(
            f"enumeration over [1, {n}] exceeds the limit {cap}; "
            f"raise it explicitly or via {ENUM_LIMIT_ENV}"
        )
