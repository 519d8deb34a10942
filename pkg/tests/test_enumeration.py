from collections import Counter

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import brute_prefixes, small_specs
from ipstree import (
    JPath,
    PartitionSpec,
    check_partition,
    count_pnm,
    enumerate_all,
    enumerate_partitions,
    iter_prefixes,
    node_count,
    row_from_jpath,
    visit_prefixes,
)
from ipstree.oracle import brute_enumerate, dp_total


@pytest.mark.parametrize(
    "n, m, expected",
    [
        (6, 3, [(4, 1, 1), (3, 2, 1), (2, 2, 2)]),
        (4, 2, [(3, 1), (2, 2)]),
        (5, 5, [(1, 1, 1, 1, 1)]),
        (1, 1, [(1,)]),
        (7, 6, [(2, 1, 1, 1, 1, 1)]),
        (6, 4, [(3, 1, 1, 1), (2, 2, 1, 1)]),
        (10, 4, [(7, 1, 1, 1), (6, 2, 1, 1), (5, 3, 1, 1), (4, 4, 1, 1), (5, 2, 2, 1),
                 (4, 3, 2, 1), (3, 3, 3, 1), (4, 2, 2, 2), (3, 3, 2, 2)]),
    ],
)
def test_enumerate_partitions(n, m, expected):
    assert list(enumerate_partitions(PartitionSpec(n, m))) == expected


def test_first_row_is_condensed():
    for spec in small_specs(30):
        first = next(enumerate_partitions(spec))
        assert first == (spec.k + 1,) + (1,) * (spec.m - 1)


def test_enumerate_is_lazy():
    stream = enumerate_partitions(PartitionSpec(200, 20))
    assert next(stream) == (181,) + (1,) * 19
    assert next(stream) == (180, 2) + (1,) * 18


def test_enumerate_matches_brute_force(specs_25):
    for spec in specs_25:
        rows = list(enumerate_partitions(spec))
        assert len(rows) == count_pnm(spec.n, spec.m)
        assert Counter(rows) == Counter(brute_enumerate(spec.n, spec.m))
        for row in rows:
            check_partition(row, spec.n, spec.m)


def test_stream_length_matches_count():
    for spec in small_specs(30):
        assert sum(1 for _ in enumerate_partitions(spec)) == count_pnm(spec.n, spec.m)


def test_rows_follow_root_outermost_order():
    # walking back from rows to j-paths must give lexicographically increasing root-first paths
    for spec in small_specs(20):
        top = spec.top_level
        paths = [tuple(row[a] - 1 for a in range(top, 0, -1)) for row in enumerate_partitions(spec)]
        assert paths == sorted(paths)
        for path in paths:
            assert row_from_jpath(JPath(spec, path)) == (spec.k + 1 - sum(path),) + tuple(
                v + 1 for v in reversed(path)
            ) + (1,) * (spec.m - 1 - top)


def test_conjugate_symmetry():
    for n in range(1, 26):
        largest = Counter(parts[0] for _, parts in enumerate_all(n))
        for m in range(1, n + 1):
            assert count_pnm(n, m) == largest[m]


@pytest.mark.parametrize("n, total", [(4, 5), (10, 42)])
def test_enumerate_all_totals(n, total):
    rows = list(enumerate_all(n))
    assert len(rows) == total == dp_total(n)
    assert [m for m, _ in rows] == sorted(m for m, _ in rows)


def test_enumerate_all_small():
    assert list(enumerate_all(3)) == [(1, (3,)), (2, (2, 1)), (3, (1, 1, 1))]
    with pytest.raises(ValueError):
        list(enumerate_all(0))


def test_enumeration_is_deterministic():
    spec = PartitionSpec(22, 6)
    assert list(enumerate_partitions(spec)) == list(enumerate_partitions(spec))


@pytest.mark.parametrize("n, m, level, visits", [(10, 3, 2, 3), (8, 4, 3, 2), (9, 4, 2, 3)])
def test_visit_prefixes(n, m, level, visits):
    spec = PartitionSpec(n, m)
    seen = []
    result = visit_prefixes(spec, level, seen.append)
    assert result == (level, visits)
    assert len(seen) == visits
    assert all(isinstance(p, JPath) and p.lowest_level == level for p in seen)
    assert result == node_count(spec, level)


def test_visit_prefixes_order_and_values():
    spec = PartitionSpec(8, 4)
    seen = []
    visit_prefixes(spec, 2, lambda p: seen.append(p.values))
    assert seen == [(0, 0), (0, 1), (1, 1)]


def test_visit_prefixes_rejects_treeless():
    with pytest.raises(ValueError):
        visit_prefixes(PartitionSpec(10, 2), 1)


def test_iter_prefixes_match_brute_force():
    for spec in small_specs(18):
        for level in range(1, spec.top_level + 1):
            prefixes = list(iter_prefixes(spec, level))
            assert len(prefixes) == len(set(prefixes))
            assert set(prefixes) == brute_prefixes(spec, level)


@given(st.integers(1, 30).flatmap(lambda n: st.tuples(st.just(n), st.integers(1, n))))
def test_rows_distinct_and_valid(nm):
    n, m = nm
    rows = list(enumerate_partitions(PartitionSpec(n, m)))
    assert len(rows) == len(set(rows))
    for row in rows:
        check_partition(row, n, m)
