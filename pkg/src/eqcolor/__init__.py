"""Equitable list colouring with degenerate colour classes.

The package splits into graph primitives (graph), layer partitions and
search (partition), the colouring pipeline and its verifier (coloring),
grid graphs with their direct partitioner (grids), generators for
witness graphs and fuzz corpora (generators), and document formats plus
the command line (fileio, cli).
"""

from .coloring import (
    AlgorithmState,
    Coloring,
    ColoringVerdict,
    ColoringViolation,
    Counters,
    ListAssignment,
    RunTrace,
    brute_force_equitable_coloring,
    build_order,
    colour_list,
    colour_vertex,
    compute_counters,
    equitable_coloring,
    modify_colour_lists,
    reorder,
    verify_equitable_list_coloring,
)
from .errors import EqcolorError, InputError, InvariantError, ParseError
from .generators import (
    NamedGraph,
    gen_basic,
    gen_example2,
    gen_gq,
    gen_planted_partition,
)
from .graph import (
    Graph,
    degeneracy,
    induced_subgraph,
    is_d_degenerate,
    max_degree,
)
from .grids import GridSpec, IncompleteGrid, corner, make_grid, partition3d
from .partition import (
    KdPartition,
    PartitionVerdict,
    PartitionViolation,
    SearchResult,
    SearchStatus,
    enumerate_last_layers,
    greedy_kd_partition,
    layer_ordering_exists,
    search_kd_partition,
    verify_kd_partition,
)

__all__ = [
    "AlgorithmState",
    "Coloring",
    "ColoringVerdict",
    "ColoringViolation",
    "Counters",
    "EqcolorError",
    "Graph",
    "GridSpec",
    "IncompleteGrid",
    "InputError",
    "InvariantError",
    "KdPartition",
    "ListAssignment",
    "NamedGraph",
    "ParseError",
    "PartitionVerdict",
    "PartitionViolation",
    "RunTrace",
    "SearchResult",
    "SearchStatus",
    "brute_force_equitable_coloring",
    "build_order",
    "colour_list",
    "colour_vertex",
    "compute_counters",
    "corner",
    "degeneracy",
    "enumerate_last_layers",
    "equitable_coloring",
    "gen_basic",
    "gen_example2",
    "gen_gq",
    "gen_planted_partition",
    "greedy_kd_partition",
    "induced_subgraph",
    "is_d_degenerate",
    "layer_ordering_exists",
    "make_grid",
    "max_degree",
    "modify_colour_lists",
    "partition3d",
    "reorder",
    "search_kd_partition",
    "verify_equitable_list_coloring",
    "verify_kd_partition",
]

__version__ = "0.1.0"
