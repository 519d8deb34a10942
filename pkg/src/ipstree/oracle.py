"""Independent ground truth for the tree-based counts and rows.

Deliberately plain: a tabulated recurrence and a naive recursive generator.
"""

from __future__ import annotations

from functools import lru_cache

BRUTE_FORCE_MAX_N = 30


@lru_cache(maxsize=8)
def _table(n_max: int) -> tuple[tuple[int, ...], ...]:
    # p(n, m) = p(n-1, m-1) + p(n-m, m), p(0, 0) = 1
    rows = [[0] * (n_max + 1) for _ in range(n_max + 1)]
    rows[0][0] = 1
    for n in range(1, n_max + 1):
        for m in range(1, n + 1):
            rows[n][m] = rows[n - 1][m - 1] + rows[n - m][m]
    return tuple(tuple(r) for r in rows)


def dp_table(n_max: int) -> tuple[tuple[int, ...], ...]:
    """``dp_table(n_max)[n][m]`` is p(n, m) for 0 <= m, n <= n_max."""
    if n_max < 0:
        raise ValueError(f"n_max must be >= 0, got {n_max}")
    return _table(n_max)


def dp_count(n: int, m: int) -> int:
    """p(n, m) by dynamic programming; zero outside 0 <= m <= n (except p(0, 0) = 1)."""
    if n < 0 or m < 0 or m > n:
        return 0
    # round the table size up so nearby queries share one table
    size = max(64, 1 << (n - 1).bit_length()) if n else 0
    return _table(size)[n][m]


def dp_total(n: int) -> int:
    """p(n) as the row sum of the dp table."""
    return sum(dp_count(n, m) for m in range(n + 1))


def _descending(n: int, m: int, largest: int):
    if m == 0:
        if n == 0:
            yield ()
        return
    for first in range(min(largest, n - m + 1), 0, -1):
        for rest in _descending(n - first, m - 1, first):
            yield (first,) + rest


def brute_enumerate(n: int, m: int) -> set[tuple[int, ...]]:
    """The set of partitions of ``n`` into exactly ``m`` parts, by naive recursion."""
    if n > BRUTE_FORCE_MAX_N:
        raise ValueError(f"brute_enumerate is capped at n <= {BRUTE_FORCE_MAX_N}, got {n}")
    if n < 0 or m < 0:
        return set()
    return set(_descending(n, m, n))
