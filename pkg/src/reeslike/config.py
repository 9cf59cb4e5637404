"""Tunable limits.  Environment variables override the defaults at call time."""

from __future__ import annotations

import os
from contextlib import contextmanager

DEFAULT_DEGREE_CAP = 40
MINOR_LIMIT = 20000
POWER_CAP = 6
FEDDER_PRIMES = (3, 5)
FEDDER_MAX_VARS = 6


_override = []


@contextmanager
def raised_degree_cap(cap: int):
    """Temporarily allow degrees up to ``cap`` (for inputs whose weights inflate every degree).

    A larger cap from the environment still wins.
    """
    _override.append(cap)
    try:
        yield cap
    finally:
        _override.pop()


def degree_cap() -> int:
    if _override:
        return max(_override[-1], _env_cap())
    return _env_cap()


def _env_cap() -> int:
    raw = os.environ.get("REESLIKE_DEGREE_CAP")
    if raw is None or not raw.strip():
        return DEFAULT_DEGREE_CAP
    try:
        cap = int(raw)
    except ValueError:
        raise ValueError(f"REESLIKE_DEGREE_CAP must be an integer, got {raw!r}") from None
    if cap < 1:
        raise ValueError("REESLIKE_DEGREE_CAP must be positive")
    return cap
