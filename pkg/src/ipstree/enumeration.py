"""Streaming generation of IPS-matrix rows and tree prefixes.

Rows come out in the nested-loop order: the root j-value varies slowest,
``j[1]`` fastest, so the first row is always the condensed ``(k+1, 1, ..., 1)``.
Only the current j-path is held in memory.
"""

from __future__ import annotations

from typing import Callable, Iterator

from ipstree.core import JPath, LevelCount, Partition, PartitionSpec, root_bound, row_from_values


def _walk(k: int, top: int, root_hi: int, stop: int) -> Iterator[list[int]]:
    # Odometer over j[top], j[top-1], ..., j[stop].  Yields the live buffer;
    # callers copy it if they keep it.
    depth = top - stop + 1
    vals = [0] * depth
    hi = [0] * depth
    rem = [0] * depth  # excess left before fixing position i
    rem[0] = k
    hi[0] = root_hi
    i = 0
    if root_hi < 0:
        return
    while True:
        while i < depth - 1:
            rem[i + 1] = rem[i] - vals[i]
            i += 1
            vals[i] = vals[i - 1]
            hi[i] = rem[i] // (top - i + 1)
        yield vals
        vals[i] += 1
        while vals[i] > hi[i]:
            i -= 1
            if i < 0:
                return
            vals[i] += 1


def iter_prefixes(spec: PartitionSpec, level: int) -> Iterator[tuple[int, ...]]:
    """Every distinct valid prefix ``(j[top], ..., j[level])`` in canonical order."""
    top = spec.top_level
    if not 1 <= level <= top:
        raise ValueError(f"level must be in 1..{top} for n={spec.n}, m={spec.m}, got {level}")
    for vals in _walk(spec.k, top, root_bound(spec), level):
        yield tuple(vals)


def visit_prefixes(
    spec: PartitionSpec, level: int, callback: Callable[[JPath], object] | None = None
) -> LevelCount:
    """Call ``callback`` once per node at ``level`` of the tree and return the node count."""
    if not spec.has_tree:
        raise ValueError(f"no tree for n={spec.n}, m={spec.m} (needs m >= 3 or k >= 3)")
    count = 0
    for values in iter_prefixes(spec, level):
        if callback is not None:
            callback(JPath(spec, values))
        count += 1
    return LevelCount(level, count)


def enumerate_partitions(spec: PartitionSpec) -> Iterator[Partition]:
    """Lazily yield every partition of ``spec.n`` into ``spec.m`` parts."""
    k, m, top = spec.k, spec.m, spec.top_level
    if top == 0:
        # M = 1, or k in {0, 1}: a single row
        yield row_from_values(k, m, ())
        return
    for vals in _walk(k, top, root_bound(spec), 1):
        yield row_from_values(k, m, vals)


def enumerate_all(n: int) -> Iterator[tuple[int, Partition]]:
    """``(m, partition)`` for every partition of ``n``, grouped by ascending m."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    for m in range(1, n + 1):
        for row in enumerate_partitions(PartitionSpec(n, m)):
            yield m, row
