"""Domain types and the j-value bounds of the IPS tree.

A partition of N into M parts is described by how many of the k = N - M
excess balls sitting in bin 0 of the most condensed distribution
``(k+1, 1, ..., 1)`` have been shifted into bins 1, 2, ...  The shift into
bin ``i`` is ``j[i]``.  Ordering the parts forces

    k - sum(j) >= j[1] >= j[2] >= ... >= j[L]

where ``L`` is the top (root) level of the tree: ``M - 1`` when M < k and
``k - 1`` when M >= k.  Every bound below is the largest ``j[a]`` that still
leaves the remaining excess spread evenly over bin ``a`` and the ``a`` bins
to its left.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import NamedTuple, Sequence

Partition = tuple[int, ...]


class LevelCount(NamedTuple):
    """Number of distinct tree nodes (valid j-prefixes) ending at ``level``."""

    level: int
    count: int


class Regime(enum.Enum):
    MINUS = "minus"  # M < k
    PLUS = "plus"  # M >= k


@dataclass(frozen=True)
class PartitionSpec:
    """The pair (n, m): partitions of ``n`` into exactly ``m`` positive parts."""

    n: int
    m: int

    def __post_init__(self) -> None:
        if isinstance(self.n, bool) or not isinstance(self.n, int):
            raise TypeError(f"n must be an int, got {self.n!r}")
        if isinstance(self.m, bool) or not isinstance(self.m, int):
            raise TypeError(f"m must be an int, got {self.m!r}")
        if self.m < 1 or self.n < self.m:
            raise ValueError(f"need 1 <= m <= n, got n={self.n}, m={self.m}")

    @property
    def k(self) -> int:
        """Excess balls above singlet occupancy."""
        return self.n - self.m

    @property
    def regime(self) -> Regime:
        return regime(self)

    @property
    def top_level(self) -> int:
        """Level of the root j-value; 0 when the path is empty."""
        if self.regime is Regime.MINUS:
            return self.m - 1
        return max(self.k - 1, 0)

    @property
    def has_tree(self) -> bool:
        """True when the nested-sum counting applies (M >= 3 or k >= 3)."""
        return self.top_level >= 2


def regime(spec: PartitionSpec) -> Regime:
    # the tie m == k belongs to PLUS
    return Regime.MINUS if spec.m < spec.k else Regime.PLUS


def _floor_share(remaining: int, level: int) -> int:
    # (R - Mod[R, a+1]) / (a+1) with R >= 0 is plain floor division
    return remaining // (level + 1)


def jmax_minus_root(spec: PartitionSpec) -> int:
    """Largest admissible ``j[M-1]`` when M < k: ``N // M - 1``."""
    if regime(spec) is not Regime.MINUS:
        raise ValueError(f"jmax_minus_root needs m < k, got n={spec.n}, m={spec.m}")
    return spec.n // spec.m - 1


def jmax_plus_root(spec: PartitionSpec) -> int:
    """``j[k-1]`` only ever takes the values 0 and 1."""
    if regime(spec) is not Regime.PLUS or spec.k < 2:
        raise ValueError(f"jmax_plus_root needs m >= k >= 2, got n={spec.n}, m={spec.m}")
    return 1


def root_bound(spec: PartitionSpec) -> int:
    """Upper bound of the root loop, whichever regime ``spec`` is in."""
    if regime(spec) is Regime.MINUS:
        return jmax_minus_root(spec)
    return jmax_plus_root(spec)


def _check_suffix(spec: PartitionSpec, level: int, suffix: Sequence[int] | JPath) -> tuple[int, ...]:
    if isinstance(suffix, JPath):
        if suffix.spec != spec:
            raise ValueError("suffix belongs to a different spec")
        values = suffix.values
    else:
        values = JPath(spec, tuple(suffix)).values
    if len(values) != spec.top_level - level:
        raise ValueError(
            f"suffix for level {level} must fix levels {level + 1}..{spec.top_level}, "
            f"got {len(values)} values"
        )
    return values


def jmax_minus(spec: PartitionSpec, level: int, suffix: Sequence[int] | JPath) -> int:
    """Largest admissible ``j[level]`` when M < k, for 1 <= level <= M-2.

    ``suffix`` holds ``j[M-1], j[M-2], ..., j[level+1]`` (root first).
    The divisor is ``level + 1``; a printed variant dividing by ``M - 1`` does
    not reproduce the worked sums and is not used.
    """
    if regime(spec) is not Regime.MINUS:
        raise ValueError(f"jmax_minus needs m < k, got n={spec.n}, m={spec.m}")
    if not 1 <= level <= spec.m - 2:
        raise ValueError(f"level must be in 1..{spec.m - 2}, got {level}")
    values = _check_suffix(spec, level, suffix)
    # the sum runs over h = level+1 .. M-1, not from h = 2
    return _floor_share(spec.k - sum(values), level)


def jmax_plus(spec: PartitionSpec, level: int, suffix: Sequence[int] | JPath) -> int:
    """Largest admissible ``j[level]`` when M >= k >= 3, for 1 <= level <= k-2."""
    if regime(spec) is not Regime.PLUS:
        raise ValueError(f"jmax_plus needs m >= k, got n={spec.n}, m={spec.m}")
    if spec.k < 3:
        raise ValueError(f"jmax_plus needs k >= 3, got k={spec.k}")
    if not 1 <= level <= spec.k - 2:
        raise ValueError(f"level must be in 1..{spec.k - 2}, got {level}")
    values = _check_suffix(spec, level, suffix)
    return _floor_share(spec.k - sum(values), level)


@dataclass(frozen=True)
class JPath:
    """A root-first run of j-values: ``values[t]`` is ``j[top_level - t]``.

    Construction rejects anything that is not a prefix of some directed path
    through the tree.
    """

    spec: PartitionSpec
    values: tuple[int, ...] = ()

    def __post_init__(self) -> None:
        values = tuple(self.values)
        object.__setattr__(self, "values", values)
        top = self.spec.top_level
        if len(values) > top:
            raise ValueError(f"path has {len(values)} values but the tree has {top} levels")
        remaining = self.spec.k
        previous = 0
        for t, v in enumerate(values):
            level = top - t
            if isinstance(v, bool) or not isinstance(v, int):
                raise TypeError(f"j[{level}] must be an int, got {v!r}")
            hi = root_bound(self.spec) if t == 0 else _floor_share(remaining, level)
            if not previous <= v <= hi:
                raise ValueError(f"j[{level}]={v} outside admissible range {previous}..{hi}")
            remaining -= v
            previous = v

    @property
    def lowest_level(self) -> int:
        """Level of the last fixed value (``top_level + 1`` for an empty path)."""
        return self.spec.top_level - len(self.values) + 1

    @property
    def is_complete(self) -> bool:
        return len(self.values) == self.spec.top_level

    def j(self, level: int) -> int:
        """The fixed value ``j[level]``."""
        t = self.spec.top_level - level
        if not 0 <= t < len(self.values):
            raise KeyError(level)
        return self.values[t]


def row_from_values(k: int, m: int, values: Sequence[int]) -> Partition:
    """Unchecked row construction from root-first j-values."""
    head = k + 1 - sum(values)
    middle = tuple(1 + v for v in reversed(values))
    return (head,) + middle + (1,) * (m - 1 - len(values))


def row_from_jpath(path: JPath) -> Partition:
    """The partition selected by a complete j-path.

    Bin 0 keeps ``k + 1 - sum(j)``, bin ``i`` holds ``1 + j[i]`` and, when
    M >= k, the last ``M - k`` bins hold a single ball each.
    """
    if not path.is_complete:
        raise ValueError(
            f"path stops at level {path.lowest_level}, needs to reach level 1"
        )
    return row_from_values(path.spec.k, path.spec.m, path.values)


def check_partition(parts: Sequence[int], n: int, m: int | None = None) -> None:
    """Raise ``ValueError`` unless ``parts`` is a nonincreasing partition of ``n``."""
    if m is not None and len(parts) != m:
        raise ValueError(f"{parts} has {len(parts)} parts, expected {m}")
    if sum(parts) != n:
        raise ValueError(f"{parts} sums to {sum(parts)}, expected {n}")
    if parts and parts[-1] < 1:
        raise ValueError(f"{parts} has a non-positive part")
    if any(a < b for a, b in zip(parts, parts[1:])):
        raise ValueError(f"{parts} is not nonincreasing")
