"""Integer partitions into exactly M parts via the IPS tree of j-values."""

from ipstree.core import (
    JPath,
    LevelCount,
    Partition,
    PartitionSpec,
    Regime,
    check_partition,
    jmax_minus,
    jmax_minus_root,
    jmax_plus,
    regime,
    row_from_jpath,
)
from ipstree.counting import count_minus, count_plus, count_pn, count_pnm, node_count
from ipstree.enumeration import enumerate_all, enumerate_partitions, iter_prefixes, visit_prefixes
from ipstree.oracle import brute_enumerate, dp_count

__all__ = [
    "JPath",
    "LevelCount",
    "Partition",
    "PartitionSpec",
    "Regime",
    "brute_enumerate",
    "check_partition",
    "count_minus",
    "count_plus",
    "count_pn",
    "count_pnm",
    "dp_count",
    "enumerate_all",
    "enumerate_partitions",
    "iter_prefixes",
    "jmax_minus",
    "jmax_minus_root",
    "jmax_plus",
    "node_count",
    "regime",
    "row_from_jpath",
    "visit_prefixes",
]
