"""Monoid elements: count vectors and their partition form.

A solution for modulus ``n`` is a count vector ``(a_1, ..., a_{n-1})`` with
``sum(i * a_i) % n == 0``.  Its partition form is the multiset holding
``a_i`` copies of ``i``; the number of parts is the degree and the sum of
the parts is ``multiplicity * n``.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Optional, Sequence

from .errors import (
    ModulusMismatch,
    NegativeEntry,
    NotInMonoid,
    PartSumNotMultipleOfModulus,
    WrongLength,
)

__all__ = [
    "Solution",
    "PartitionForm",
    "make_solution",
    "degree",
    "multiplicity",
    "to_partition_form",
    "from_partition_form",
    "add",
    "subtract_checked",
    "zero",
    "extremal",
]


def _weight(counts: Sequence[int]) -> int:
    return sum(i * a for i, a in enumerate(counts, start=1))


@dataclass(frozen=True)
class Solution:
    """An immutable, always-valid element of the solution monoid."""

    n: int
    counts: tuple[int, ...]

    def __post_init__(self):
        n = self.n
        if n < 2:
            raise ValueError(f"modulus must be >= 2, got {n}")
        counts = tuple(int(a) for a in self.counts)
        object.__setattr__(self, "counts", counts)
        if len(counts) != n - 1:
            raise WrongLength(f"expected {n - 1} counts for n={n}, got {len(counts)}")
        if any(a < 0 for a in counts):
            raise NegativeEntry(f"negative entry in {counts}")
        if _weight(counts) % n:
            raise NotInMonoid(
                f"{counts}: weighted sum {_weight(counts)} is not divisible by {n}"
            )

    @classmethod
    def _trusted(cls, n: int, counts: tuple[int, ...]) -> "Solution":
        # skips validation; callers guarantee membership
        obj = object.__new__(cls)
        object.__setattr__(obj, "n", n)
        object.__setattr__(obj, "counts", counts)
        return obj

    @cached_property
    def degree(self) -> int:
        return sum(self.counts)

    @cached_property
    def multiplicity(self) -> int:
        q, r = divmod(_weight(self.counts), self.n)
        assert r == 0, "membership invariant violated"
        return q

    def is_zero(self) -> bool:
        return not any(self.counts)

    def sort_key(self):
        return (self.degree, self.counts)

    def __add__(self, other: "Solution") -> "Solution":
        return add(self, other)

    def __le__(self, other: "Solution") -> bool:
        """Componentwise dominance."""
        _same_modulus(self, other)
        return all(a <= b for a, b in zip(self.counts, other.counts))

    def to_dict(self) -> dict:
        return {"n": self.n, "counts": list(self.counts)}

    @classmethod
    def from_dict(cls, d: dict) -> "Solution":
        return cls(int(d["n"]), tuple(d["counts"]))

    def __str__(self):
        return "(" + ",".join(map(str, self.counts)) + ")"


@dataclass(frozen=True)
class PartitionForm:
    """Sorted (weakly decreasing) multiset of parts in ``1..n-1``."""

    n: int
    parts: tuple[int, ...]

    def __post_init__(self):
        parts = tuple(sorted((int(y) for y in self.parts), reverse=True))
        object.__setattr__(self, "parts", parts)
        if self.n < 2:
            raise ValueError(f"modulus must be >= 2, got {self.n}")
        if parts and not (1 <= parts[-1] and parts[0] <= self.n - 1):
            raise ValueError(f"parts must lie in 1..{self.n - 1}: {parts}")
        if sum(parts) % self.n:
            raise PartSumNotMultipleOfModulus(
                f"parts {parts} sum to {sum(parts)}, not a multiple of {self.n}"
            )

    def to_dict(self) -> dict:
        return {"n": self.n, "parts": list(self.parts)}

    @classmethod
    def from_dict(cls, d: dict) -> "PartitionForm":
        return cls(int(d["n"]), tuple(d["parts"]))


def _same_modulus(a, b):
    if a.n != b.n:
        raise ModulusMismatch(f"moduli differ: {a.n} != {b.n}")


def make_solution(n: int, counts: Iterable[int]) -> Solution:
    return Solution(n, tuple(counts))


def zero(n: int) -> Solution:
    return Solution._trusted(n, (0,) * (n - 1))


def extremal(n: int, i: int) -> Solution:
    """``E_i``: ``n`` in slot ``i`` (1-based), zero elsewhere."""
    if not 1 <= i <= n - 1:
        raise ValueError(f"index {i} outside 1..{n - 1}")
    counts = [0] * (n - 1)
    counts[i - 1] = n
    return Solution._trusted(n, tuple(counts))


def degree(a: Solution) -> int:
    return a.degree


def multiplicity(a: Solution) -> int:
    return a.multiplicity


def to_partition_form(a: Solution) -> PartitionForm:
    parts = []
    for i in range(a.n - 1, 0, -1):
        parts.extend([i] * a.counts[i - 1])
    return PartitionForm(a.n, tuple(parts))


def from_partition_form(p: PartitionForm) -> Solution:
    counts = [0] * (p.n - 1)
    for y in p.parts:
        counts[y - 1] += 1
    return Solution(p.n, tuple(counts))


def add(a: Solution, b: Solution) -> Solution:
    _same_modulus(a, b)
    return Solution._trusted(a.n, tuple(x + y for x, y in zip(a.counts, b.counts)))


def subtract_checked(a: Solution, b: Solution) -> Optional[Solution]:
    """``a - b`` if ``b <= a`` componentwise, else ``None``.

    The difference of two members is again a member, so no re-check is needed.
    """
    _same_modulus(a, b)
    diff = tuple(x - y for x, y in zip(a.counts, b.counts))
    if any(d < 0 for d in diff):
        return None
    return Solution._trusted(a.n, diff)
