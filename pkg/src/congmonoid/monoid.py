"""Enumeration of the solution monoid and its indecomposable generators."""

from __future__ import annotations

import itertools
import logging
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence

from .errors import OracleScaleExceeded, ResourceLimit, TrivialSolution
from .solution import Solution, extremal, subtract_checked

log = logging.getLogger(__name__)

__all__ = [
    "IndecomposableSet",
    "DEFAULT_LIMIT",
    "enumerate_degree",
    "iter_degree",
    "is_indecomposable",
    "indecomposables",
    "minimal_zero_sum",
    "extremals",
    "brute_force_im",
    "decompose",
]

DEFAULT_LIMIT = 20_000_000
WARN_N = 30


@dataclass(frozen=True)
class IndecomposableSet:
    n: int
    elements: tuple[Solution, ...]

    def __post_init__(self):
        object.__setattr__(
            self, "elements", tuple(sorted(self.elements, key=Solution.sort_key))
        )

    @property
    def by_degree(self) -> dict[int, tuple[Solution, ...]]:
        out: dict[int, list[Solution]] = {}
        for a in self.elements:
            out.setdefault(a.degree, []).append(a)
        return {k: tuple(v) for k, v in out.items()}

    def degree(self, k: int) -> tuple[Solution, ...]:
        return tuple(a for a in self.elements if a.degree == k)

    def __len__(self):
        return len(self.elements)

    def __iter__(self):
        return iter(self.elements)

    def __contains__(self, a):
        return a in set(self.elements)

    def as_set(self) -> frozenset[Solution]:
        return frozenset(self.elements)

    def to_dict(self) -> dict:
        return {"n": self.n, "elements": [a.to_dict() for a in self.elements]}

    @classmethod
    def from_dict(cls, d: dict) -> "IndecomposableSet":
        n = int(d["n"])
        return cls(n, tuple(Solution(n, tuple(e["counts"])) for e in d["elements"]))


def iter_degree(n: int, k: int) -> Iterator[tuple[int, ...]]:
    """Count vectors of ``M(k)`` in ascending lexicographic order.

    The last two coordinates are solved for rather than enumerated: with
    ``r`` parts left and running weight ``s``, putting ``b`` parts of weight
    ``n-2`` and ``r-b`` of weight ``n-1`` contributes ``-(r + b)`` mod n.
    """
    if n < 2 or k < 0:
        raise ValueError(f"need n >= 2 and k >= 0, got n={n}, k={k}")
    if n == 2:
        if k % 2 == 0:
            yield (k,)
        return
    if n == 3:
        # a1 + 2 a2 = a1 - a2 (mod 3) with a1 + a2 = k
        for a1 in range(k + 1):
            if (a1 - (k - a1)) % 3 == 0:
                yield (a1, k - a1)
        return
    head = n - 3
    prefix = [0] * head

    def rec(idx: int, remaining: int, s: int):
        if idx == head:
            # need s - r - b = 0 (mod n), 0 <= b <= r, emitted with b ascending
            b = (s - remaining) % n
            while b <= remaining:
                yield tuple(prefix) + (b, remaining - b)
                b += n
            return
        w = idx + 1
        for a in range(remaining + 1):
            prefix[idx] = a
            yield from rec(idx + 1, remaining - a, (s + w * a) % n)
        prefix[idx] = 0

    yield from rec(0, k, 0)


def enumerate_degree(n: int, k: int) -> list[Solution]:
    """All elements of ``M(k)``, lexicographic on count vectors."""
    return [Solution._trusted(n, c) for c in iter_degree(n, k)]


def _zero_sub_count(a: Solution) -> int:
    """Number of sub-vectors ``0 <= B <= a`` with weight divisible by n."""
    n = a.n
    dist = [0] * n
    dist[0] = 1
    for i, c in enumerate(a.counts, start=1):
        if not c:
            continue
        new = [0] * n
        for r, cnt in enumerate(dist):
            if not cnt:
                continue
            for t in range(c + 1):
                new[(r + i * t) % n] += cnt
        dist = new
    return dist[0]


def is_indecomposable(
    a: Solution, context: Optional[Iterable[Solution]] = None
) -> bool:
    """True iff no member ``0 != B != a`` satisfies ``B <= a``.

    With ``context`` (all indecomposables of degree below ``a.degree``), the
    test is dominance by one of them.  Otherwise the sub-vectors of ``a`` are
    counted by residue: ``a`` is indecomposable iff only ``0`` and ``a``
    itself have weight divisible by ``n``.
    """
    if a.is_zero():
        raise TrivialSolution("the trivial solution is neither decomposable nor not")
    if context is not None:
        for b in context:
            if b != a and b.degree < a.degree and b <= a:
                return False
        return True
    return _zero_sub_count(a) == 2


def minimal_zero_sum(
    n: int, allowed: Sequence[int], limit: int = DEFAULT_LIMIT
) -> list[tuple[int, ...]]:
    """Ascending-degree sweep for the indecomposables supported on ``allowed``.

    Degree layer ``k`` keeps every zero-sum-free multiset of ``k`` parts
    (parts non-decreasing), each with the bitmask of residues reached by its
    non-empty sub-multisets.  Extending ``S`` by a part ``x >= max(S)``:

    * if ``sum(S) + x = 0`` the result is indecomposable, since any proper
      zero-sum sub-multiset through ``x`` would leave a zero-sum complement
      inside ``S``;
    * if the extended mask reaches ``0`` the extension dominates a lower
      degree indecomposable and the whole branch is pruned;
    * otherwise it survives into layer ``k + 1``.

    Every indecomposable is reached from its sorted prefix, which is
    zero-sum-free, so the sweep is complete.  It stops once a layer is
    empty, which happens by degree ``n``.  Returns sorted part tuples.
    """
    allowed = sorted({x % n for x in allowed} - {0})
    full = (1 << n) - 1
    found: list[tuple[int, ...]] = []
    layer: list[tuple[tuple[int, ...], int, int, int]] = [((), 0, 0, 0)]
    visited = 0
    while layer:
        nxt = []
        for parts, last_idx, s, mask in layer:
            for j in range(last_idx, len(allowed)):
                x = allowed[j]
                visited += 1
                if (s + x) % n == 0:
                    found.append(parts + (x,))
                    continue
                rot = ((mask << x) | (mask >> (n - x))) & full
                new = mask | rot | (1 << x)
                if not new & 1:
                    nxt.append((parts + (x,), j, (s + x) % n, new))
            if visited > limit:
                raise ResourceLimit(
                    f"candidate cap {limit} exceeded while sweeping n={n}"
                )
        layer = nxt
    return found


def _counts(n: int, parts: Iterable[int]) -> tuple[int, ...]:
    counts = [0] * (n - 1)
    for y in parts:
        counts[y - 1] += 1
    return tuple(counts)


_IM_CACHE: dict[int, IndecomposableSet] = {}


def indecomposables(n: int, limit: int = DEFAULT_LIMIT) -> IndecomposableSet:
    """The complete set ``IM`` of indecomposable solutions for modulus ``n``.

    Sorted by (degree, counts).  Results are memoised per ``n``.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n in _IM_CACHE:
        return _IM_CACHE[n]
    if n > WARN_N:
        log.warning("n=%d: indecomposable sweep cost grows quickly", n)
    found = minimal_zero_sum(n, range(1, n), limit)
    im = IndecomposableSet(
        n, tuple(Solution._trusted(n, _counts(n, p)) for p in found)
    )
    _IM_CACHE[n] = im
    return im


def extremals(n: int) -> list[tuple[int, Solution, bool]]:
    """``(i, E_i, indecomposable?)`` for ``i = 1..n-1``."""
    return [(i, extremal(n, i), math.gcd(i, n) == 1) for i in range(1, n)]


def _bounded_vectors(length: int, total: int, cap: int) -> Iterator[tuple[int, ...]]:
    if length == 0:
        yield ()
        return
    for a in range(min(total, cap) + 1):
        for rest in _bounded_vectors(length - 1, total - a, cap):
            yield (a,) + rest


def brute_force_im(n: int, max_n: int = 15) -> IndecomposableSet:
    """Naive oracle for ``IM``; for tests only.

    Scans every vector with entries ``<= n`` and total ``<= n``, keeps the
    members, and rejects any member with a proper non-zero member below it
    by trying every sub-vector.
    """
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")
    if n > max_n:
        raise OracleScaleExceeded(f"brute-force oracle capped at n={max_n}")
    weights = range(1, n)
    out = []
    for vec in _bounded_vectors(n - 1, n, n):
        if not any(vec):
            continue
        if sum(w * a for w, a in zip(weights, vec)) % n:
            continue
        decomposable = False
        for sub in itertools.product(*(range(a + 1) for a in vec)):
            if sub == vec or not any(sub):
                continue
            if sum(w * b for w, b in zip(weights, sub)) % n == 0:
                decomposable = True
                break
        if not decomposable:
            out.append(Solution(n, vec))
    return IndecomposableSet(n, tuple(out))


def decompose(a: Solution, im: IndecomposableSet) -> list[Solution]:
    """Write ``a`` as a sum of indecomposables by greedy checked subtraction."""
    parts = []
    rest = a
    gens = im.elements
    while not rest.is_zero():
        for b in gens:
            diff = subtract_checked(rest, b)
            if diff is not None:
                parts.append(b)
                rest = diff
                break
        else:
            raise AssertionError(f"{rest} dominates no indecomposable")
    return parts
