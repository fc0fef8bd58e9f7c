"""Fast generation of the level-1 indecomposables of high degree.

For ``k >= ceil(n/2) + 1`` the multiplicity-1 solutions of degree ``k``
correspond one-to-one with the partitions of ``n - k``: pad the partition
with zeros to ``k`` entries, add one to every entry and count how often
each value occurs.  Each such solution is indecomposable and its orbit has
exactly ``phi(n)`` elements, only one of multiplicity 1.
"""

from __future__ import annotations

from typing import Sequence

from .arith import PartitionSpec, partitions
from .errors import BelowThreshold, PartTooLarge, TooManyParts, WrongSum
from .orbit import Orbit, orbit_of
from .solution import Solution

__all__ = [
    "ceil_half",
    "threshold",
    "conjecture_threshold",
    "mult1_from_partition",
    "level1_layer",
]


def ceil_half(n: int) -> int:
    return n - n // 2


def threshold(n: int) -> int:
    """Smallest degree at which the generator is complete."""
    return ceil_half(n) + 1


def conjecture_threshold(n: int) -> int:
    return n // 2 + 2


def mult1_from_partition(n: int, k: int, partition: Sequence[int]) -> Solution:
    parts = list(partition)
    if sum(parts) != n - k:
        raise WrongSum(f"partition {parts} does not sum to n-k={n - k}")
    if len(parts) > k:
        raise TooManyParts(f"partition {parts} has more than k={k} parts")
    if any(b > n - 2 for b in parts):
        raise PartTooLarge(f"partition {parts} has a part above n-2={n - 2}")
    counts = [0] * (n - 1)
    counts[0] = k - len(parts)
    for b in parts:
        counts[b] += 1  # part b+1 lands in slot b (0-based)
    return Solution._trusted(n, tuple(counts))


def level1_layer(
    n: int, k: int, orbits: bool = False, force: bool = False
) -> list[Solution] | list[Orbit]:
    """The multiplicity-1 solutions of degree ``k``, or their orbits.

    Output follows the partition order of ``n - k`` (lexicographically
    decreasing).  Below the threshold the layer may be incomplete, so
    ``BelowThreshold`` is raised unless ``force`` is set.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if k < threshold(n) and not force:
        raise BelowThreshold(k, threshold(n))
    if k > n or k < 1:
        return []
    spec = PartitionSpec(n - k, max_part=max(n - 2, 1), max_len=k)
    sols = [mult1_from_partition(n, k, b) for b in partitions(spec)]
    if orbits:
        # below threshold one orbit may hold several of the seeds
        out, seen = [], set()
        for a in sols:
            if a not in seen:
                orb = orbit_of(a)
                seen.update(orb.elements)
                out.append(orb)
        return out
    return sols
