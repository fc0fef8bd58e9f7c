"""Machine checks of the structural theorems and conjectures.

Checks come in two tiers.  ``proved`` checks encode theorems: any witness
is a bug and makes the report ``FAILED``.  ``open`` checks probe
conjectures and only report; a ``FAILED`` open check is data, not an error.
Every witness is a plain dict that :func:`recheck` can re-validate alone.
"""

from __future__ import annotations

import json
import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field
from typing import Callable, Iterable, Optional

from .arith import PartitionSpec, partition_count, partitions, totient
from .errors import ScaleExceeded
from .gen import ceil_half, conjecture_threshold, level1_layer, threshold
from .monoid import enumerate_degree, indecomposables
from .orbit import act, level, orbit_decomposition, orbit_of, unit_group
from .solution import Solution, from_partition_form, PartitionForm

__all__ = [
    "PROVED",
    "CONJECTURE",
    "FAILED",
    "VerificationReport",
    "CHECKS",
    "check_quadratic",
    "check_lemma_ones",
    "check_conjecture1",
    "check_conjecture2",
    "check_conjecture3",
    "check_noether",
    "check_identities",
    "check_level2_remark",
    "summary_table",
    "run_checks",
    "recheck",
    "reports_to_json",
    "render_reports",
]

PROVED = "proved-and-verified"
CONJECTURE = "conjecture-holds-in-range"
FAILED = "FAILED"

EXHAUSTIVE_CAP = 12
LEMMA_CAP = 20
TABLE_CAP = 15


@dataclass
class VerificationReport:
    check_name: str
    n: int
    tier: str
    scope: dict
    status: str
    witnesses: list = field(default_factory=list)
    counts: dict = field(default_factory=dict)

    @property
    def failed(self) -> bool:
        return self.status == FAILED

    def to_dict(self) -> dict:
        return asdict(self)


def _report(name, n, tier, scope, witnesses, counts):
    if witnesses:
        status = FAILED
    else:
        status = PROVED if tier == "proved" else CONJECTURE
    return VerificationReport(name, n, tier, scope, status, witnesses, counts)


def _cap(n: int, cap: int, what: str):
    if n > cap:
        raise ScaleExceeded(f"{what} is capped at n={cap} (got n={n})")
    if n < 2:
        raise ValueError(f"n must be >= 2, got {n}")


# single-instance predicates; each returns True when the statement holds


def quadratic_holds(a: Solution, g: int) -> bool:
    """Degree/multiplicity inequality for ``B = g . a``; vacuous when
    ``k < g*u - v``."""
    k, u = a.degree, a.multiplicity
    v = act(g, a).multiplicity
    if k < g * u - v:
        return True
    return u * g * g - (k + u + v) * g + v * (a.n + 1) >= 0


def ones_hold(n: int, parts: tuple[int, ...]) -> bool:
    k = len(parts)
    if k >= n // 2 + 2 and parts[-3:] != (1, 1, 1):
        return False
    if k >= ceil_half(n) + 1 and parts[-2:] != (1, 1):
        return False
    return True


def identities_hold(a: Solution) -> bool:
    rev = act(a.n - 1, a)
    if a.multiplicity + rev.multiplicity != a.degree:
        return False
    orb = orbit_of(a)
    return 2 * sum(b.multiplicity for b in orb.elements) == a.degree * orb.size


def level2_orbit_ok(a: Solution) -> bool:
    phi = totient(a.n)
    return orbit_of(a).size in {phi, phi // 2} if phi % 2 == 0 else orbit_of(a).size == phi


def check_quadratic(n: int, k_max: Optional[int] = None, cap: int = EXHAUSTIVE_CAP):
    _cap(n, cap, "check_quadratic")
    k_max = n if k_max is None else k_max
    units = unit_group(n).elements
    witnesses = []
    tested = applicable = 0
    for k in range(k_max + 1):
        for a in enumerate_degree(n, k):
            u = a.multiplicity
            for g in units:
                tested += 1
                v = act(g, a).multiplicity
                if k < g * u - v:
                    continue
                applicable += 1
                if u * g * g - (k + u + v) * g + v * (n + 1) < 0:
                    witnesses.append({"counts": list(a.counts), "g": g, "k": k, "u": u, "v": v})
    return _report(
        "quadratic", n, "proved", {"k": [0, k_max]}, witnesses,
        {"pairs": tested, "applicable": applicable},
    )


def _mult1_solutions(n: int):
    for p in partitions(PartitionSpec(n, max_part=n - 1)):
        yield p


def check_lemma_ones(n: int, cap: int = LEMMA_CAP):
    _cap(n, cap, "check_lemma_ones")
    witnesses = []
    tested = three = two = 0
    for p in _mult1_solutions(n):
        k = len(p)
        tested += 1
        three += k >= n // 2 + 2
        two += k >= ceil_half(n) + 1
        if not ones_hold(n, p):
            witnesses.append({"parts": list(p)})
    return _report(
        "lemma_ones", n, "proved", {"multiplicity": 1}, witnesses,
        {"tested": tested, "three_ones_range": three, "two_ones_range": two},
    )


def _level1_orbits(n: int, k: int):
    im_k = indecomposables(n).degree(k)
    orbits = orbit_decomposition(im_k)
    return [o for o in orbits if o.level == 1], orbits


def check_conjecture3(n: int, cap: int = EXHAUSTIVE_CAP):
    """Level-1 orbit counts, orbit sizes, and generator completeness."""
    _cap(n, cap, "check_conjecture3")
    phi = totient(n)
    witnesses = []
    counts = {"degrees": 0, "level1_orbits": 0, "level1_solutions": 0}
    lo = min(conjecture_threshold(n), threshold(n))
    for k in range(lo, n + 1):
        lvl1, _ = _level1_orbits(n, k)
        counts["degrees"] += 1
        counts["level1_orbits"] += len(lvl1)
        counts["level1_solutions"] += sum(o.size for o in lvl1)
        expected = partition_count(n - k)
        if k >= conjecture_threshold(n) and len(lvl1) != expected:
            witnesses.append({"k": k, "kind": "orbit_count", "found": len(lvl1), "expected": expected})
        if k >= threshold(n):
            for o in lvl1:
                m1 = sum(1 for e in o.elements if e.multiplicity == 1)
                if o.size != phi or m1 != 1:
                    witnesses.append({
                        "k": k, "kind": "orbit_shape",
                        "representative": list(o.representative.counts),
                        "size": o.size, "mult1": m1,
                    })
            layer = level1_layer(n, k, orbits=True)
            generated = {e for o in layer for e in o.elements}
            exhaustive = {e for o in lvl1 for e in o.elements}
            if generated != exhaustive or len(layer) != expected:
                witnesses.append({
                    "k": k, "kind": "generator",
                    "generated": len(generated), "exhaustive": len(exhaustive),
                    "layer": len(layer), "expected": expected,
                })
    return _report(
        "conjecture3", n, "proved",
        {"k": [lo, n], "count_from": conjecture_threshold(n), "shape_from": threshold(n)},
        witnesses, counts,
    )


def check_conjecture1(n: int, cap: int = EXHAUSTIVE_CAP):
    _cap(n, cap, "check_conjecture1")
    lo = conjecture_threshold(n)
    witnesses = []
    tested = 0
    for k in range(lo, n + 1):
        for a in indecomposables(n).degree(k):
            tested += 1
            lv = level(a)
            if lv != 1:
                witnesses.append({"counts": list(a.counts), "k": k, "level": lv})
    return _report("conjecture1", n, "open", {"k": [lo, n]}, witnesses, {"tested": tested})


def check_conjecture2(n: int, cap: int = EXHAUSTIVE_CAP):
    _cap(n, cap, "check_conjecture2")
    lo = conjecture_threshold(n)
    witnesses = []
    total = 0
    for k in range(lo, n + 1):
        orbits = orbit_decomposition(indecomposables(n).degree(k))
        total += len(orbits)
        expected = partition_count(n - k)
        if len(orbits) != expected:
            witnesses.append({"k": k, "orbits": len(orbits), "expected": expected})
    return _report("conjecture2", n, "open", {"k": [lo, n]}, witnesses, {"orbits": total})


def check_noether(n: int, cap: int = EXHAUSTIVE_CAP):
    _cap(n, cap, "check_noether")
    im = indecomposables(n)
    witnesses = [
        {"counts": list(a.counts), "kind": "degree_above_n"} for a in im if a.degree > n
    ]
    top = {a.counts for a in im.degree(n)}
    expected = set()
    for i in range(1, n):
        if math.gcd(i, n) == 1:
            c = [0] * (n - 1)
            c[i - 1] = n
            expected.add(tuple(c))
    for c in sorted(top ^ expected):
        witnesses.append({"counts": list(c), "kind": "degree_n_slice"})
    max_deg = max(a.degree for a in im)
    if max_deg != n:
        witnesses.append({"kind": "max_degree", "max_degree": max_deg})
    return _report(
        "noether", n, "proved", {"degrees": [1, n]}, witnesses,
        {"F": len(im), "max_degree": max_deg, "degree_n": len(top), "phi": totient(n)},
    )


def check_identities(n: int, cap: int = EXHAUSTIVE_CAP):
    _cap(n, cap, "check_identities")
    im = indecomposables(n)
    witnesses = [{"counts": list(a.counts)} for a in im if not identities_hold(a)]
    return _report("identities", n, "proved", {"set": "IM"}, witnesses, {"tested": len(im)})


def check_level2_remark(n: int, cap: int = EXHAUSTIVE_CAP):
    """Orbit sizes of level-2 solutions of degree ``k >= (2n+8)/3``.

    Every level-2 orbit holds a multiplicity-2 element, i.e. a partition of
    ``2n`` into ``k`` parts below ``n``, so those are the seeds.
    """
    _cap(n, cap, "check_level2_remark")
    phi = totient(n)
    witnesses = []
    seen = set()
    tested = 0
    k_lo = -(-(2 * n + 8) // 3)
    for p in partitions(PartitionSpec(2 * n, max_part=n - 1)):
        if len(p) < k_lo:
            continue
        a = from_partition_form(PartitionForm(n, p))
        if a.counts in seen:
            continue
        orb = orbit_of(a)
        seen.update(e.counts for e in orb.elements)
        if orb.level != 2:
            continue
        tested += 1
        allowed = {phi, phi // 2} if phi % 2 == 0 else {phi}
        if orb.size not in allowed:
            witnesses.append({"counts": list(orb.representative.counts), "size": orb.size})
    return _report(
        "level2_remark", n, "proved", {"k_min": k_lo, "set": "M"}, witnesses,
        {"tested": tested, "phi": phi},
    )


CHECKS: dict[str, tuple[Callable[..., VerificationReport], str]] = {
    "quadratic": (check_quadratic, "proved"),
    "lemma_ones": (check_lemma_ones, "proved"),
    "conjecture3": (check_conjecture3, "proved"),
    "noether": (check_noether, "proved"),
    "identities": (check_identities, "proved"),
    "level2_remark": (check_level2_remark, "proved"),
    "conjecture1": (check_conjecture1, "open"),
    "conjecture2": (check_conjecture2, "open"),
}


def recheck(check_name: str, n: int, witness: dict) -> bool:
    """True if ``witness`` still exhibits the failure it was recorded for."""
    if check_name == "quadratic":
        return not quadratic_holds(Solution(n, tuple(witness["counts"])), witness["g"])
    if check_name == "lemma_ones":
        return not ones_hold(n, tuple(witness["parts"]))
    if check_name == "identities":
        return not identities_hold(Solution(n, tuple(witness["counts"])))
    if check_name == "level2_remark":
        a = Solution(n, tuple(witness["counts"]))
        return level(a) == 2 and not level2_orbit_ok(a)
    if check_name == "conjecture1":
        a = Solution(n, tuple(witness["counts"]))
        return a in indecomposables(n) and level(a) != 1
    if check_name == "conjecture2":
        k = witness["k"]
        return len(orbit_decomposition(indecomposables(n).degree(k))) != partition_count(n - k)
    if check_name in ("conjecture3", "noether"):
        report = CHECKS[check_name][0](n)
        return witness in report.witnesses
    raise KeyError(check_name)


def _run_one(job):
    name, n, kwargs = job
    return CHECKS[name][0](n, **kwargs)


def run_checks(
    ns: Iterable[int],
    names: Optional[Iterable[str]] = None,
    workers: int = 1,
    **kwargs,
) -> list[VerificationReport]:
    """Run every requested (check, n) pair; output sorted by (check, n)."""
    names = list(CHECKS) if names is None else list(names)
    for name in names:
        if name not in CHECKS:
            raise KeyError(f"unknown check {name!r}")
    jobs = [(name, n, kwargs) for name in names for n in ns]
    if workers == 1 or len(jobs) < 2:
        reports = [_run_one(j) for j in jobs]
    else:
        with ProcessPoolExecutor(max_workers=workers or None) as pool:
            reports = list(pool.map(_run_one, jobs))
    order = {name: i for i, name in enumerate(CHECKS)}
    reports.sort(key=lambda r: (order[r.check_name], r.n))
    return reports


def summary_table(n_max: int, cap: int = TABLE_CAP, n_min: int = 2) -> list[dict]:
    """Per-modulus generator counts against the partition/totient lower bound."""
    _cap(n_max, cap, "summary_table")
    rows = []
    for n in range(n_min, n_max + 1):
        f = len(indecomposables(n))
        p = partition_count(n)
        phi = totient(n)
        bound = p + phi - 1
        rows.append({"n": n, "F": f, "p": p, "phi": phi, "kac_bound": bound, "bound_met": f >= bound})
    return rows


def reports_to_json(reports: list[VerificationReport]) -> str:
    return json.dumps([r.to_dict() for r in reports], indent=2, sort_keys=True)


def render_reports(reports: list[VerificationReport]) -> str:
    header = ("check", "n", "tier", "status", "witnesses", "counts")
    rows = [
        (
            r.check_name, str(r.n), r.tier, r.status, str(len(r.witnesses)),
            " ".join(f"{k}={v}" for k, v in sorted(r.counts.items())),
        )
        for r in reports
    ]
    widths = [max(len(h), *(len(row[i]) for row in rows)) if rows else len(h) for i, h in enumerate(header)]
    lines = ["  ".join(h.ljust(w) for h, w in zip(header, widths)).rstrip()]
    for row in rows:
        lines.append("  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip())
    return "\n".join(lines)
