"""Partition counts as numbers of directed paths through the IPS tree.

The number of nodes at level ``a`` is a nested sum over the j-values of all
levels above ``a``; the innermost term ``J_max[a] - j[a+1] + 1`` counts the
children of one level-(a+1) node.  Paths end at level 1, so the number of
partitions is the node count at level 1.

The nesting depth depends on (N, M), so the sums are evaluated with an
explicit odometer rather than recursion.  No memoization: the cost of the
literal nested sum is what ``ipstree bench`` measures.
"""

from __future__ import annotations

from ipstree.core import (
    LevelCount,
    PartitionSpec,
    Regime,
    jmax_minus_root,
    jmax_plus_root,
    regime,
)


def _nested_sum(k: int, top: int, root_hi: int, level: int) -> int:
    """Sum of ``J_max[level] - j[level+1] + 1`` over every prefix j[top..level+1]."""
    if level == top:
        return root_hi + 1
    depth = top - level  # fixed positions: levels top .. level+1
    last = depth - 1
    div = level + 1
    vals = [0] * depth
    hi = [0] * depth
    rem = [0] * (depth + 1)  # rem[i]: excess left before fixing position i
    rem[0] = k
    hi[0] = root_hi
    total = 0
    i = 0
    while True:
        while i < last:
            rem[i + 1] = rem[i] - vals[i]
            i += 1
            vals[i] = vals[i - 1]
            hi[i] = rem[i] // (top - i + 1)
        # innermost loop over the level-(level+1) value, one term per node
        r = rem[last]
        v = vals[last]
        h = hi[last]
        while v <= h:
            total += (r - v) // div - v + 1
            v += 1
        i = last - 1
        if i < 0:
            return total
        vals[i] += 1
        while vals[i] > hi[i]:
            i -= 1
            if i < 0:
                return total
            vals[i] += 1


def _tree_bounds(spec: PartitionSpec) -> tuple[int, int]:
    if not spec.has_tree:
        raise ValueError(f"no tree for n={spec.n}, m={spec.m} (needs m >= 3 or k >= 3)")
    if regime(spec) is Regime.MINUS:
        return spec.m - 1, jmax_minus_root(spec)
    return spec.k - 1, jmax_plus_root(spec)


def node_count(spec: PartitionSpec, level: int) -> LevelCount:
    """Number of nodes at ``level`` of the tree for ``spec``.

    ``level`` may be anything from 1 up to the root level; at the root the
    count is just the number of admissible root values.
    """
    top, root_hi = _tree_bounds(spec)
    if not 1 <= level <= top:
        raise ValueError(f"level must be in 1..{top}, got {level}")
    return LevelCount(level, _nested_sum(spec.k, top, root_hi, level))


def _paths(spec: PartitionSpec) -> int:
    top, root_hi = _tree_bounds(spec)
    return _nested_sum(spec.k, top, root_hi, 1)


def count_minus(spec: PartitionSpec) -> int:
    """p(N, M) for M < k."""
    if regime(spec) is not Regime.MINUS:
        raise ValueError(f"count_minus needs m < k, got n={spec.n}, m={spec.m}")
    if spec.m == 1:
        return 1
    if spec.m == 2:
        return (spec.n - spec.n % 2) // 2
    return _paths(spec)


def count_plus(spec: PartitionSpec) -> int:
    """p(N, M) for M >= k."""
    if regime(spec) is not Regime.PLUS:
        raise ValueError(f"count_plus needs m >= k, got n={spec.n}, m={spec.m}")
    if spec.k <= 1:
        return 1
    if spec.k == 2:
        return 2
    return _paths(spec)


def count_pnm(n: int, m: int) -> int:
    """Number of partitions of ``n`` into exactly ``m`` parts."""
    spec = PartitionSpec(n, m)
    if regime(spec) is Regime.MINUS:
        return count_minus(spec)
    return count_plus(spec)


def count_pn(n: int) -> int:
    """Total number of partitions of ``n``.

    From n = 7 on, the five single-row and two-row cases (M = 1, 2, N-2,
    N-1, N) are folded into the constant ``5 + N // 2`` and only the tree
    counts are summed.  Below 7 those M ranges overlap, so every p(N, M) is
    added directly.
    """
    if isinstance(n, bool) or not isinstance(n, int):
        raise TypeError(f"n must be an int, got {n!r}")
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    if n < 7:
        return sum(count_pnm(n, m) for m in range(1, n + 1))
    half = (n - n % 2) // 2
    # even n: m = n/2 has m == k and belongs to the plus sum
    minus_top = half - 1 if n % 2 == 0 else half
    total = 5 + half
    for m in range(3, minus_top + 1):
        total += _paths(PartitionSpec(n, m))
    for m in range(minus_top + 1, n - 2):
        total += _paths(PartitionSpec(n, m))
    return total
