"""Enumeration, statistics, and counting of partitions."""

from collections import Counter

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from pie.partitions import (
    Partition,
    count_exact_part_sizes,
    distinct_stats,
    enumerate_distinct,
    enumerate_partitions,
    partition_count,
    partitions_by_largest_and_sizes,
    stats,
)

# hand-checked initial segment of the partition counts
P_SMALL = [1, 1, 2, 3, 5, 7, 11, 15, 22, 30, 42]


def test_partitions_of_one():
    assert [p.parts for p in enumerate_partitions(1)] == [(1,)]


def test_partitions_of_three():
    assert [p.parts for p in enumerate_partitions(3)] == [(3,), (2, 1), (1, 1, 1)]


def test_distinct_of_three():
    assert [p.parts for p in enumerate_distinct(3)] == [(3,), (2, 1)]


def test_distinct_of_six():
    assert [p.parts for p in enumerate_distinct(6)] == [
        (6,),
        (5, 1),
        (4, 2),
        (3, 2, 1),
    ]


def test_distinct_of_one():
    assert [p.parts for p in enumerate_distinct(1)] == [(1,)]


def test_partition_count_small():
    assert [partition_count(n) for n in range(len(P_SMALL))] == P_SMALL


def test_partition_count_rejects_negative():
    with pytest.raises(ValueError):
        partition_count(-1)


@pytest.mark.parametrize("n", range(0, 41))
def test_enumeration_count_matches_recurrence(n):
    assert sum(1 for _ in enumerate_partitions(n)) == partition_count(n)


def test_stream_count_n60():
    # ~1e6 items; the recurrence is the independent oracle
    assert partition_count(60) == 966467
    assert sum(1 for _ in enumerate_partitions(60)) == 966467


@pytest.mark.parametrize("n", range(1, 41))
def test_distinct_equals_filtered_enumeration(n):
    filtered = [p.parts for p in enumerate_partitions(n) if p.is_distinct]
    assert [p.parts for p in enumerate_distinct(n)] == filtered


@pytest.mark.parametrize("n", [5, 12, 19, 26])
def test_enumeration_is_lexicographically_descending(n):
    seen = [p.parts for p in enumerate_partitions(n)]
    assert seen == sorted(seen, reverse=True)
    assert len(set(seen)) == len(seen)


def test_empty_partition_only_from_zero():
    assert [p.parts for p in enumerate_partitions(0)] == [()]
    assert [p.parts for p in enumerate_distinct(0)] == [()]
    with pytest.raises(ValueError):
        stats(Partition(()))


def test_enumeration_guard():
    with pytest.raises(ValueError):
        next(enumerate_partitions(201))
    with pytest.raises(ValueError):
        next(enumerate_distinct(300))
    # overridable
    assert next(enumerate_partitions(201, guard=201)).parts == (201,)


def test_partition_validation():
    with pytest.raises(ValueError):
        Partition((1, 2))
    with pytest.raises(ValueError):
        Partition((3, 0))
    with pytest.raises(ValueError):
        Partition((2, -1))


def test_stats_examples():
    assert stats(Partition((3, 2, 1))) == stats(Partition((3, 2, 1)))
    s = stats(Partition((3, 2, 1)))
    assert (s.smallest, s.largest, s.num_parts, s.num_distinct) == (1, 3, 3, 3)
    s = stats(Partition((2, 2, 1, 1)))
    assert (s.smallest, s.largest, s.num_parts, s.num_distinct) == (1, 2, 4, 2)
    s = stats(Partition((4, 4, 4)))
    assert (s.smallest, s.largest, s.num_parts, s.num_distinct) == (4, 4, 3, 1)


@settings(max_examples=30, deadline=None)
@given(st.integers(min_value=1, max_value=26))
def test_emitted_partitions_are_valid(n):
    for p in enumerate_partitions(n):
        parts = p.parts
        assert sum(parts) == n
        assert all(a >= 1 for a in parts)
        assert all(parts[i] >= parts[i + 1] for i in range(len(parts) - 1))
        assert p.num_distinct <= p.largest
        assert p.num_distinct <= p.num_parts


def test_count_exact_part_sizes_examples():
    assert count_exact_part_sizes(6, 1) == 4  # the divisors 6, 3+3, 2+2+2, 1*6
    assert count_exact_part_sizes(6, 2) == 6
    assert count_exact_part_sizes(6, 3) == 1  # 3+2+1


def test_count_exact_part_sizes_triangular_cutoff():
    for n in range(1, 30):
        t = 1
        while t * (t + 1) // 2 <= n + 6:
            if t * (t + 1) // 2 > n:
                assert count_exact_part_sizes(n, t) == 0
            t += 1


@pytest.mark.parametrize("n", range(1, 31))
def test_size_counts_sum_to_partition_count(n):
    total = sum(count_exact_part_sizes(n, t) for t in range(1, n + 1))
    assert total == partition_count(n)


@pytest.mark.parametrize("n", range(1, 23))
def test_count_exact_part_sizes_against_enumeration(n):
    brute = Counter(p.num_distinct for p in enumerate_partitions(n))
    for t in range(1, n + 1):
        assert count_exact_part_sizes(n, t) == brute.get(t, 0)


def test_count_exact_part_sizes_validation():
    with pytest.raises(ValueError):
        count_exact_part_sizes(0, 1)
    with pytest.raises(ValueError):
        count_exact_part_sizes(5, 0)


@pytest.mark.parametrize("n", range(1, 26))
def test_profile_by_largest_and_sizes_against_enumeration(n):
    brute = Counter((p.largest, p.num_distinct) for p in enumerate_partitions(n))
    assert partitions_by_largest_and_sizes(n) == dict(brute)


@pytest.mark.parametrize("n", range(1, 31))
def test_distinct_stats_matches_enumeration(n):
    expected = tuple(
        (p.smallest, p.largest, p.num_parts) for p in enumerate_distinct(n)
    )
    assert distinct_stats(n) == expected


def test_partition_str():
    assert str(Partition((4, 2))) == "4+2"
    assert str(Partition(())) == "(empty)"
