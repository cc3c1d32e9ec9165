"""Partitions of graphs into 2-connected parts under degree-sum conditions.

Graphs are :class:`Graph` objects over vertices ``0..n-1`` with bitmask
adjacency.  The main entry points are :func:`summarize` for the degree-sum
invariants, :func:`construct_2pp` / :func:`construct_almost_2pp` for
partitions, :func:`recognize` for the exceptional families and the
brute-force checks in :mod:`twoproper.oracle`.
"""

from .exceptional import ExceptionalClass, enumerate_family, generate, match, recognize
from .generators import (
    complete,
    complete_bipartite,
    cycle,
    path,
    random_graph,
    random_graphs,
    sharp_gt,
    sharp_gt_prime,
)
from .graph import (
    BlockDecomposition,
    Graph,
    GraphFormatError,
    RootedBlockTree,
    block_decomposition,
    emit_edge_list,
    emit_graph6,
    is_biconnected,
    is_connected,
    parse_edge_list,
    parse_graph6,
    root_block_tree,
)
from .invariants import (
    INF,
    IndependentSetReport,
    InvariantSummary,
    alpha_star,
    independence_number,
    min_degree,
    pi2,
    sigma2,
    sigma_star,
    sigma_star_at_least,
    summarize,
)
from .oracle import BudgetExceeded, OracleBudget, oracle_alpha_star, oracle_min_2pp, oracle_sigma_star
from .partition import (
    ConstructionFailure,
    Exceptional,
    Partition,
    PartitionKind,
    Partitioned,
    PreconditionError,
    PreconditionFailed,
    construct_2pp,
    construct_almost_2pp,
    verify_partition,
)

__all__ = [name for name in dir() if not name.startswith("_")]
