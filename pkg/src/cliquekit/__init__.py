"""cliquekit: maximal clique enumeration with graph reduction.

The package couples Bron-Kerbosch style recursive enumeration with three
cooperating reduction layers: a global low-degree/edge kernelization that
shrinks the input before any recursion starts, a dynamic candidate-set
reduction applied at every recursion entry, and a forbidden-set dominance
filter that prunes maximality bookkeeping at the outer level.
"""

from .graphs import (
    CompactGraph,
    DegeneracyOrder,
    EditableGraph,
    GraphFormatError,
    common_neighbor_exists,
    compact,
    degeneracy_order,
    from_edges,
)
from .engine import CliqueSink, EnumConfig, enumerate_cliques, run_full
from .oracle import OracleLimitError, brute_force_mce, subset_mce, verify_cliques
from .reduction import ReductionLedger, global_reduce

__all__ = [
    "CliqueSink",
    "CompactGraph",
    "DegeneracyOrder",
    "EditableGraph",
    "EnumConfig",
    "GraphFormatError",
    "OracleLimitError",
    "ReductionLedger",
    "brute_force_mce",
    "common_neighbor_exists",
    "compact",
    "degeneracy_order",
    "enumerate_cliques",
    "from_edges",
    "global_reduce",
    "run_full",
    "subset_mce",
    "verify_cliques",
]

__version__ = "0.1.0"
