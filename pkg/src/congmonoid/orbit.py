"""The unit group of Z/nZ acting on solutions by permuting coordinates."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable

from .arith import units_mod
from .errors import ModulusMismatch, NotActionClosed, NotAUnit
from .solution import Solution

__all__ = [
    "UnitGroup",
    "Orbit",
    "unit_group",
    "act",
    "orbit_of",
    "level",
    "orbit_decomposition",
]


class UnitGroup:
    """Units ``g`` of Z/nZ with their index permutations ``i -> g*i mod n``.

    ``perms[g][i-1]`` is ``sigma_g(i)``; ``_pull[g]`` is the 0-based inverse
    used to permute count vectors.  Immutable after construction.
    """

    def __init__(self, n: int):
        self.n = n
        self.elements = units_mod(n)
        perms = {}
        pull = {}
        for g in self.elements:
            sigma = tuple(g * i % n for i in range(1, n))
            perms[g] = sigma
            inv = [0] * (n - 1)
            for i, j in enumerate(sigma):
                inv[j - 1] = i
            pull[g] = tuple(inv)
        self.perms = perms
        self._pull = pull

    def __len__(self):
        return len(self.elements)

    def __repr__(self):
        return f"UnitGroup(n={self.n}, order={len(self)})"

    def check(self, g: int) -> int:
        g %= self.n
        if g not in self.perms:
            raise NotAUnit(f"{g} is not a unit modulo {self.n}")
        return g

    def sigma(self, g: int, i: int) -> int:
        return self.perms[self.check(g)][i - 1]

    def cycles(self, g: int) -> list[tuple[int, ...]]:
        """Disjoint cycles of ``sigma_g`` on ``1..n-1``, fixed points included,
        each starting from its least element, ordered by that element."""
        sigma = self.perms[self.check(g)]
        seen = set()
        out = []
        for start in range(1, self.n):
            if start in seen:
                continue
            cyc = [start]
            seen.add(start)
            j = sigma[start - 1]
            while j != start:
                cyc.append(j)
                seen.add(j)
                j = sigma[j - 1]
            out.append(tuple(cyc))
        return out

    def act_counts(self, g: int, counts: tuple[int, ...]) -> tuple[int, ...]:
        return tuple(counts[i] for i in self._pull[g])


@lru_cache(maxsize=None)
def unit_group(n: int) -> UnitGroup:
    return UnitGroup(n)


def act(g: int, a: Solution) -> Solution:
    """``g . A``: the count at slot ``g*i mod n`` becomes ``a_i``."""
    if math.gcd(g, a.n) != 1:
        raise NotAUnit(f"{g} is not a unit modulo {a.n}")
    group = unit_group(a.n)
    g = group.check(g)
    return Solution._trusted(a.n, group.act_counts(g, a.counts))


@dataclass(frozen=True)
class Orbit:
    representative: Solution
    elements: tuple[Solution, ...]
    level: int

    @property
    def size(self) -> int:
        return len(self.elements)

    @property
    def degree(self) -> int:
        return self.representative.degree

    def to_dict(self) -> dict:
        return {
            "representative": self.representative.to_dict(),
            "size": self.size,
            "level": self.level,
            "elements": [e.to_dict() for e in self.elements],
        }


def _orbit_counts(a: Solution) -> list[tuple[int, ...]]:
    group = unit_group(a.n)
    return sorted({group.act_counts(g, a.counts) for g in group.elements})


def orbit_of(a: Solution) -> Orbit:
    elems = tuple(Solution._trusted(a.n, c) for c in _orbit_counts(a))
    return Orbit(elems[0], elems, min(e.multiplicity for e in elems))


def level(a: Solution) -> int:
    """Least multiplicity over the orbit of ``a``; ``level(0) == 0``."""
    n = a.n
    return min(
        sum(i * c for i, c in enumerate(counts, start=1)) // n
        for counts in _orbit_counts(a)
    )


def orbit_decomposition(solutions: Iterable[Solution]) -> list[Orbit]:
    """Split an action-closed set of solutions into orbits, sorted by
    representative.  Raises ``NotActionClosed`` with a witness otherwise."""
    sols = list(solutions)
    if not sols:
        return []
    n = sols[0].n
    for s in sols:
        if s.n != n:
            raise ModulusMismatch(f"mixed moduli {n} and {s.n}")
    group = unit_group(n)
    pool = {s.counts for s in sols}
    seen: set[tuple[int, ...]] = set()
    orbits = []
    for s in sorted(pool):
        if s in seen:
            continue
        members = set()
        for g in group.elements:
            img = group.act_counts(g, s)
            if img not in pool:
                raise NotActionClosed(
                    f"{g} . {s} = {img} is missing from the input",
                    witness=Solution._trusted(n, img),
                    g=g,
                    source=Solution._trusted(n, s),
                )
            members.add(img)
        seen |= members
        elems = tuple(Solution._trusted(n, c) for c in sorted(members))
        orbits.append(Orbit(elems[0], elems, min(e.multiplicity for e in elems)))
    orbits.sort(key=lambda o: o.representative.counts)
    return orbits
