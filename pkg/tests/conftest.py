import functools
import itertools

import pytest

from congmonoid.solution import Solution


@functools.lru_cache(maxsize=None)
def naive_partitions(t):
    """All partitions of t as a set: peel off any one part and sort."""
    if t == 0:
        return frozenset({()})
    return frozenset(
        tuple(sorted(p + (x,), reverse=True))
        for x in range(1, t + 1)
        for p in naive_partitions(t - x)
    )


def naive_degree(n, k):
    """M(k) by scanning all vectors of length n-1 with entries <= k."""
    out = set()
    for vec in itertools.product(range(k + 1), repeat=n - 1):
        if sum(vec) == k and sum(i * a for i, a in enumerate(vec, 1)) % n == 0:
            out.add(vec)
    return out


@pytest.fixture
def S():
    return lambda n, *counts: Solution(n, counts)


_ACCEPTANCE = {}


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(num, title): acceptance criterion")


@pytest.hookimpl(hookwrapper=True)
def pytest_runtest_makereport(item, call):
    outcome = yield
    rep = outcome.get_result()
    marker = item.get_closest_marker("criterion")
    if marker is None:
        return
    if rep.when == "call" or (rep.when == "setup" and rep.failed):
        num, title = marker.args
        _ACCEPTANCE[num] = (title, "PASS" if rep.passed else "FAIL", rep.duration)


def pytest_terminal_summary(terminalreporter):
    if not _ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(_ACCEPTANCE):
        title, status, dur = _ACCEPTANCE[num]
        terminalreporter.write_line(f"criterion {num:2d}  {status}  {title}  ({dur:.2f}s)")
