import math

import pytest
from hypothesis import given, strategies as st

from congmonoid.arith import PartitionSpec, gcd, partition_count, partitions, totient, units_mod

from conftest import naive_partitions


@pytest.mark.parametrize("a,b,g", [(4, 6, 2), (1, 17, 1), (9, 6, 3)])
def test_gcd(a, b, g):
    assert gcd(a, b) == g


def test_gcd_rejects_nonpositive():
    with pytest.raises(ValueError):
        gcd(0, 3)


@pytest.mark.parametrize("n,phi", [(9, 6), (6, 2), (1, 1), (12, 4), (97, 96)])
def test_totient(n, phi):
    assert totient(n) == phi


def test_units_mod():
    assert units_mod(9) == (1, 2, 4, 5, 7, 8)
    assert units_mod(6) == (1, 5)
    assert units_mod(2) == (1,)
    with pytest.raises(ValueError):
        units_mod(1)


@given(st.integers(2, 300))
def test_units_match_totient(n):
    us = units_mod(n)
    assert len(us) == totient(n)
    assert 1 in us and n - 1 in us
    assert set(us) == {g for g in range(1, n) if math.gcd(g, n) == 1}


def test_partition_count_small():
    assert partition_count(0) == 1
    assert partition_count(4) == len(naive_partitions(4)) == 5
    assert partition_count(5) == len(naive_partitions(5)) == 7


def test_partition_count_large_exact():
    # p(100) is a classical value
    assert partition_count(100) == 190569292
    big = partition_count(10_000)
    assert isinstance(big, int) and big.bit_length() > 300


@pytest.mark.parametrize("t", range(0, 41))
def test_partition_count_matches_generator(t):
    assert partition_count(t) == sum(1 for _ in partitions(t))


@pytest.mark.parametrize("t", range(0, 13))
def test_partitions_against_brute_force(t):
    emitted = list(partitions(t))
    assert set(emitted) == naive_partitions(t)
    assert len(emitted) == len(set(emitted))
    assert emitted == sorted(emitted, reverse=True)


def test_partition_examples():
    assert list(partitions(PartitionSpec(2))) == [(2,), (1, 1)]
    assert list(partitions(PartitionSpec(0))) == [()]
    assert list(partitions(PartitionSpec(3, max_part=2))) == [(2, 1), (1, 1, 1)]


@given(st.integers(0, 18), st.integers(1, 8), st.integers(1, 8))
def test_bounded_partitions(t, max_part, max_len):
    got = list(partitions(PartitionSpec(t, max_part, max_len)))
    want = {p for p in naive_partitions(t) if len(p) <= max_len and (not p or p[0] <= max_part)}
    assert set(got) == want and len(got) == len(want)
    for p in got:
        assert sum(p) == t and list(p) == sorted(p, reverse=True)


def test_partition_spec_validation():
    with pytest.raises(ValueError):
        PartitionSpec(-1)
    with pytest.raises(ValueError):
        PartitionSpec(3, max_part=0)
