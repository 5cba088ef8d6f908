"""Integer partitions, their statistics, and exact counting helpers.

Everything in this module is exact integer arithmetic.  Enumeration order is
deterministic: partitions are yielded as nonincreasing part tuples in
lexicographically descending order, so (n) comes first and (1,1,...,1) last.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator

# Full enumeration of P(n) is exponential; refuse accidental big n unless the
# caller raises the guard explicitly.
DEFAULT_ENUMERATION_GUARD = 200


@dataclass(frozen=True)
class Partition:
    """A partition stored as a nonincreasing tuple of positive parts.

    The empty partition (of 0) is constructible but carries no statistics;
    every statistic accessor rejects it.
    """

    parts: tuple[int, ...]

    def __post_init__(self) -> None:
        parts = self.parts
        if not isinstance(parts, tuple):
            parts = tuple(parts)
            object.__setattr__(self, "parts", parts)
        if parts:
            if parts[-1] < 1:
                raise ValueError(f"parts must be positive integers: {parts}")
            if list(parts) != sorted(parts, reverse=True):
                raise ValueError(f"parts must be nonincreasing: {parts}")

    @property
    def n(self) -> int:
        return sum(self.parts)

    @property
    def smallest(self) -> int:
        self._require_nonempty()
        return self.parts[-1]

    @property
    def largest(self) -> int:
        self._require_nonempty()
        return self.parts[0]

    @property
    def num_parts(self) -> int:
        self._require_nonempty()
        return len(self.parts)

    @property
    def num_distinct(self) -> int:
        self._require_nonempty()
        return len(set(self.parts))

    @property
    def is_distinct(self) -> bool:
        return len(set(self.parts)) == len(self.parts)

    def _require_nonempty(self) -> None:
        if not self.parts:
            raise ValueError("statistics are undefined on the empty partition")

    def __str__(self) -> str:
        return "+".join(str(a) for a in self.parts) if self.parts else "(empty)"


@dataclass(frozen=True)
class PartitionStats:
    """The four statistics every weighted identity consumes."""

    smallest: int
    largest: int
    num_parts: int
    num_distinct: int


def stats(p: Partition) -> PartitionStats:
    """Return (smallest, largest, #parts, #distinct sizes) of a nonempty partition."""
    return PartitionStats(p.smallest, p.largest, p.num_parts, p.num_distinct)


def _descending_parts(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    # Recursive descent; each prefix is shared through one buffer.
    buf: list[int] = []

    def rec(rem: int, bound: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield tuple(buf)
            return
        top = bound if bound < rem else rem
        for a in range(top, 0, -1):
            buf.append(a)
            yield from rec(rem - a, a)
            buf.pop()

    yield from rec(n, cap)


def _descending_distinct_parts(n: int, cap: int) -> Iterator[tuple[int, ...]]:
    buf: list[int] = []

    def rec(rem: int, bound: int) -> Iterator[tuple[int, ...]]:
        if rem == 0:
            yield tuple(buf)
            return
        top = bound if bound < rem else rem
        for a in range(top, 0, -1):
            # the leftover must fit under distinct parts < a
            if rem - a > a * (a - 1) // 2:
                break
            buf.append(a)
            yield from rec(rem - a, a - 1)
            buf.pop()

    yield from rec(n, cap)


def enumerate_partitions(
    n: int, guard: int = DEFAULT_ENUMERATION_GUARD
) -> Iterator[Partition]:
    """Yield every partition of n exactly once, lexicographically descending.

    n = 0 yields the single empty partition by convention.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > guard:
        raise ValueError(f"n={n} exceeds the enumeration guard {guard}")
    if n == 0:
        yield Partition(())
        return
    for t in _descending_parts(n, n):
        yield Partition(t)


def enumerate_distinct(
    n: int, guard: int = DEFAULT_ENUMERATION_GUARD
) -> Iterator[Partition]:
    """Yield every partition of n with pairwise distinct parts, descending."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n > guard:
        raise ValueError(f"n={n} exceeds the enumeration guard {guard}")
    if n == 0:
        yield Partition(())
        return
    for t in _descending_distinct_parts(n, n):
        yield Partition(t)


_PCOUNTS: list[int] = [1]


def partition_count(n: int) -> int:
    """p(n) by the pentagonal-number recurrence, exact for any n >= 0.

    Serves as the independent oracle for the enumerators.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    P = _PCOUNTS
    while len(P) <= n:
        m = len(P)
        total = 0
        k = 1
        while True:
            g1 = k * (3 * k - 1) // 2
            if g1 > m:
                break
            sign = -1 if k % 2 == 0 else 1
            total += sign * P[m - g1]
            g2 = g1 + k
            if g2 <= m:
                total += sign * P[m - g2]
            k += 1
        P.append(total)
    return P[n]


def _max_distinct_sizes(n: int) -> int:
    # t distinct sizes force a sum of at least 1+2+...+t
    v = 0
    while (v + 1) * (v + 2) // 2 <= n:
        v += 1
    return v


def _apply_size(f: list[list[int]], m: int, vmax: int, cap: int) -> None:
    # Extend the table with part size m taken with multiplicity >= 1.
    # f[v][r] counts partitions of r from the sizes processed so far with
    # exactly v distinct sizes; rows are updated top-down so that row v-1
    # still holds the pre-m values when row v consumes it.
    for v in range(vmax, 0, -1):
        prev = f[v - 1]
        row = f[v]
        carry = [0] * (cap + 1)
        for r in range(m, cap + 1):
            s = prev[r - m] + carry[r - m]
            carry[r] = s
            row[r] += s


def _table_cap(n: int) -> int:
    cap = 32
    while cap < n:
        cap *= 2
    return cap


@lru_cache(maxsize=4)
def _size_count_table(cap: int) -> tuple[tuple[int, ...], ...]:
    # final table over all part sizes <= cap
    vmax = _max_distinct_sizes(cap)
    f = [[0] * (cap + 1) for _ in range(vmax + 1)]
    f[0][0] = 1
    for m in range(1, cap + 1):
        _apply_size(f, m, vmax, cap)
    return tuple(tuple(row) for row in f)


@lru_cache(maxsize=4)
def _size_count_history(cap: int) -> tuple[tuple[tuple[int, ...], ...], ...]:
    # history[m] = table restricted to part sizes <= m
    vmax = _max_distinct_sizes(cap)
    f = [[0] * (cap + 1) for _ in range(vmax + 1)]
    f[0][0] = 1
    history = [tuple(tuple(row) for row in f)]
    for m in range(1, cap + 1):
        _apply_size(f, m, vmax, cap)
        history.append(tuple(tuple(row) for row in f))
    return tuple(history)


def count_exact_part_sizes(n: int, t: int) -> int:
    """Number of partitions of n with exactly t distinct part sizes.

    Dynamic programming over part sizes; scales to n in the hundreds, far
    beyond what enumeration can reach.  count_exact_part_sizes(n, 1) equals
    the divisor count d(n).
    """
    if n < 1:
        raise ValueError("n must be positive")
    if t < 1:
        raise ValueError("t must be positive")
    if t * (t + 1) // 2 > n:
        return 0
    table = _size_count_table(_table_cap(n))
    return table[t][n]


@lru_cache(maxsize=None)
def partitions_by_largest_and_sizes(n: int) -> dict[tuple[int, int], int]:
    """Group P(n) by (largest part, number of distinct sizes), as counts.

    The sum-over-P(n) side of several identities depends on a partition only
    through this pair, so the grouped counts replace full enumeration.
    """
    if n < 1:
        raise ValueError("n must be positive")
    history = _size_count_history(_table_cap(n))
    vmax = _max_distinct_sizes(n)
    out: dict[tuple[int, int], int] = {}
    for largest in range(1, n + 1):
        below = history[largest - 1]
        for v in range(1, vmax + 1):
            prev = below[v - 1]
            total = 0
            r = n - largest
            while r >= 0:
                total += prev[r]
                r -= largest
            if total:
                out[(largest, v)] = total
    return out


@lru_cache(maxsize=None)
def distinct_stats(n: int) -> tuple[tuple[int, int, int], ...]:
    """(smallest, largest, num_parts) for every member of D(n), cached.

    Enumeration order matches enumerate_distinct.  D(n) stays small (about
    1.1e4 at n = 60), so caching the raw stat triples keeps the identity
    sweeps cheap without materializing Partition objects.
    """
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n == 0:
        return ()
    return tuple(
        (t[-1], t[0], len(t)) for t in _descending_distinct_parts(n, n)
    )
