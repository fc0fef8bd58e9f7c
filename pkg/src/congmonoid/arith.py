"""Exact elementary number theory and integer partitions."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Optional

__all__ = [
    "PartitionSpec",
    "gcd",
    "totient",
    "units_mod",
    "partition_count",
    "partitions",
]


def gcd(a: int, b: int) -> int:
    if a < 1 or b < 1:
        raise ValueError(f"gcd expects positive integers, got ({a}, {b})")
    return math.gcd(a, b)


@lru_cache(maxsize=None)
def totient(n: int) -> int:
    """Euler's phi by trial-division factorisation; ``totient(1) == 1``."""
    if n < 1:
        raise ValueError(f"totient expects n >= 1, got {n}")
    result = n
    m = n
    p = 2
    while p * p <= m:
        if m % p == 0:
            while m % p == 0:
                m //= p
            result -= result // p
        p += 1
    if m > 1:
        result -= result // m
    return result


@lru_cache(maxsize=None)
def units_mod(n: int) -> tuple[int, ...]:
    """Residues ``1 <= g < n`` coprime to ``n``, ascending."""
    if n < 2:
        raise ValueError(f"units_mod expects n >= 2, got {n}")
    return tuple(g for g in range(1, n) if math.gcd(g, n) == 1)


_pcache = [1]


def partition_count(t: int) -> int:
    """Number of partitions of ``t`` (with ``p(0) == 1``).

    Uses Euler's pentagonal-number recurrence over Python integers, so it is
    exact for any ``t``; values are memoised across calls.
    """
    if t < 0:
        raise ValueError(f"partition_count expects t >= 0, got {t}")
    p = _pcache
    for m in range(len(p), t + 1):
        total = 0
        j = 1
        while True:
            g1 = j * (3 * j - 1) // 2
            if g1 > m:
                break
            sign = 1 if j % 2 else -1
            total += sign * p[m - g1]
            g2 = j * (3 * j + 1) // 2
            if g2 <= m:
                total += sign * p[m - g2]
            j += 1
        p.append(total)
    return p[t]


@dataclass(frozen=True)
class PartitionSpec:
    """Partitions of ``target`` with optional bounds on part size and length."""

    target: int
    max_part: Optional[int] = None
    max_len: Optional[int] = None

    def __post_init__(self):
        if self.target < 0:
            raise ValueError("target must be >= 0")
        for name in ("max_part", "max_len"):
            bound = getattr(self, name)
            if bound is not None and bound < 1:
                raise ValueError(f"{name} must be >= 1 when given")


def partitions(spec: PartitionSpec | int) -> Iterator[tuple[int, ...]]:
    """Yield the partitions of ``spec.target`` in lexicographically
    decreasing order, each as a weakly decreasing tuple.

    ``partitions(0)`` yields the single empty partition.
    """
    if isinstance(spec, int):
        spec = PartitionSpec(spec)
    t = spec.target
    max_part = t if spec.max_part is None else min(spec.max_part, t)
    max_len = t if spec.max_len is None else spec.max_len
    yield from _partitions(t, max_part, max_len)


def _partitions(t: int, max_part: int, max_len: int) -> Iterator[tuple[int, ...]]:
    if t == 0:
        yield ()
        return
    if max_len == 0:
        return
    for first in range(min(t, max_part), 0, -1):
        # remaining parts are all <= first
        if first * max_len < t:
            break
        for rest in _partitions(t - first, first, max_len - 1):
            yield (first,) + rest
