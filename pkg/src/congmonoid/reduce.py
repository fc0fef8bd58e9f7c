"""Reduction of ``w_1 x_1 + ... + w_r x_r = 0 (mod n)`` to the canonical
congruence, and lifting of its generators back to the original variables.

Weights are reduced mod ``n``.  Variables of weight 0 are unconstrained and
contribute the unit vectors as generators.  Variables sharing a residue are
merged into one canonical variable; a generator of the merged problem lifts
to every way of splitting each merged count among its group.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .errors import OracleScaleExceeded, SupportMismatch
from .monoid import DEFAULT_LIMIT, minimal_zero_sum
from .solution import Solution

__all__ = [
    "GeneralCongruence",
    "ReductionMap",
    "reduce",
    "restricted_indecomposables",
    "lift",
    "compositions",
    "general_indecomposables",
    "brute_force_general",
    "satisfies",
]


@dataclass(frozen=True)
class GeneralCongruence:
    n: int
    weights: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "weights", tuple(int(w) for w in self.weights))
        if self.n < 2:
            raise ValueError(f"modulus must be >= 2, got {self.n}")
        if not self.weights:
            raise ValueError("at least one weight is required")

    @property
    def r(self) -> int:
        return len(self.weights)


@dataclass(frozen=True)
class ReductionMap:
    n: int
    r: int
    canonical_support: tuple[int, ...]
    groups: dict[int, tuple[int, ...]] = field(hash=False)
    dropped: tuple[int, ...]

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "r": self.r,
            "support": list(self.canonical_support),
            "groups": {str(s): list(v) for s, v in self.groups.items()},
            "dropped": list(self.dropped),
        }


def satisfies(gc: GeneralCongruence, x: Sequence[int]) -> bool:
    return sum(w * a for w, a in zip(gc.weights, x)) % gc.n == 0


def reduce(gc: GeneralCongruence) -> ReductionMap:
    groups: dict[int, list[int]] = {}
    dropped = []
    for idx, w in enumerate(gc.weights):
        s = w % gc.n
        if s == 0:
            dropped.append(idx)
        else:
            groups.setdefault(s, []).append(idx)
    support = tuple(sorted(groups))
    return ReductionMap(
        gc.n,
        gc.r,
        support,
        {s: tuple(groups[s]) for s in support},
        tuple(dropped),
    )


def restricted_indecomposables(
    n: int, support: Iterable[int], limit: int = DEFAULT_LIMIT
) -> list[Solution]:
    """Generators of the canonical monoid restricted to ``a_i = 0`` off
    ``support``, from the degree sweep run on the support alone."""
    support = sorted(set(support))
    if not support:
        raise ValueError("support must be non-empty")
    if any(not 1 <= s <= n - 1 for s in support):
        raise ValueError(f"support must lie in 1..{n - 1}: {support}")
    out = []
    for parts in minimal_zero_sum(n, support, limit):
        counts = [0] * (n - 1)
        for y in parts:
            counts[y - 1] += 1
        out.append(Solution._trusted(n, tuple(counts)))
    out.sort(key=Solution.sort_key)
    return out


def compositions(total: int, parts: int) -> Iterator[tuple[int, ...]]:
    """Weak compositions of ``total`` into ``parts`` entries, reverse-lex."""
    if parts == 1:
        yield (total,)
        return
    for first in range(total, -1, -1):
        for rest in compositions(total - first, parts - 1):
            yield (first,) + rest


def lift(rm: ReductionMap, restricted: Solution) -> Iterator[tuple[int, ...]]:
    """Every original-variable vector lying over ``restricted``."""
    if restricted.n != rm.n:
        raise SupportMismatch(f"modulus {restricted.n} != {rm.n}")
    supp = set(rm.canonical_support)
    for i, c in enumerate(restricted.counts, start=1):
        if c and i not in supp:
            raise SupportMismatch(f"count at weight {i} is outside the support")
    choices = []
    for s in rm.canonical_support:
        group = rm.groups[s]
        choices.append(
            [(group, comp) for comp in compositions(restricted.counts[s - 1], len(group))]
        )
    for combo in itertools.product(*choices):
        x = [0] * rm.r
        for group, comp in combo:
            for idx, c in zip(group, comp):
                x[idx] = c
        yield tuple(x)


def general_indecomposables(
    gc: GeneralCongruence, limit: int = DEFAULT_LIMIT
) -> list[tuple[int, ...]]:
    """Minimal generators of the solution monoid of ``gc``, sorted by
    (degree, vector)."""
    rm = reduce(gc)
    out = []
    for j in rm.dropped:
        e = [0] * rm.r
        e[j] = 1
        out.append(tuple(e))
    if rm.canonical_support:
        for a in restricted_indecomposables(rm.n, rm.canonical_support, limit):
            out.extend(lift(rm, a))
    out.sort(key=lambda x: (sum(x), x))
    return out


def brute_force_general(gc: GeneralCongruence, max_cells: int = 2_000_000) -> list[tuple[int, ...]]:
    """Oracle: scan every vector with entries ``<= n`` and keep the non-zero
    solutions with no proper non-zero solution below them."""
    n, r = gc.n, gc.r
    if (n + 1) ** r > max_cells:
        raise OracleScaleExceeded(f"(n+1)^r = {(n + 1) ** r} exceeds {max_cells}")
    out = []
    for x in itertools.product(range(n + 1), repeat=r):
        if not any(x) or not satisfies(gc, x):
            continue
        minimal = True
        for sub in itertools.product(*(range(a + 1) for a in x)):
            if sub != x and any(sub) and satisfies(gc, sub):
                minimal = False
                break
        if minimal:
            out.append(x)
    out.sort(key=lambda x: (sum(x), x))
    return out
