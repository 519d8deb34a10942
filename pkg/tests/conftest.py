from itertools import product

import pytest

from ipstree.oracle import brute_enumerate


def j_values(parts, levels):
    """j[1..levels] read off a partition: bin i holds 1 + j[i]."""
    return [p - 1 for p in parts[1 : levels + 1]]


def brute_prefixes(spec, level):
    """Distinct root-first (j[top], ..., j[level]) prefixes over all partitions of the spec."""
    top = spec.top_level
    seen = set()
    for parts in brute_enumerate(spec.n, spec.m):
        js = j_values(parts, top)
        seen.add(tuple(js[a - 1] for a in range(top, level - 1, -1)))
    return seen


def small_specs(n_max):
    from ipstree import PartitionSpec

    return [PartitionSpec(n, m) for n, m in product(range(1, n_max + 1), repeat=2) if m <= n]


@pytest.fixture(scope="session")
def specs_25():
    return small_specs(25)


ACCEPTANCE_RESULTS = []


def pytest_configure(config):
    config.addinivalue_line("markers", "criterion(label): acceptance criterion label")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for label, ok, elapsed in sorted(ACCEPTANCE_RESULTS, key=lambda r: int(r[0].split()[0])):
        terminalreporter.write_line(f"{'PASS' if ok else 'FAIL'}  criterion {label}  ({elapsed:.2f}s)")
