"""Rainbow vertex-connection colorings: constructions, verification, and an
exact brute-force oracle for small graphs."""

from .coloring import (
    Coloring,
    PaletteLedger,
    attach_ear,
    balanced_chain_coloring,
    balanced_coloring,
    block_bound,
    block_coloring,
    cycle_coloring,
    cycle_rvc_value,
    long_ear_coloring,
    parse_coloring,
    serialize_coloring,
    two_connected_coloring,
)
from .decompose import (
    Ear,
    EarDecomposition,
    ear_decomposition,
    find_initial_cycle,
    longest_ear,
    serialize_decomposition,
)
from .errors import (
    BudgetExceededError,
    ConstructionError,
    DuplicateEdgeWarning,
    GraphFormatError,
    PreconditionError,
    SearchInconclusiveError,
)
from .graph import (
    BlockDecomposition,
    Graph,
    block_decomposition,
    cut_vertices,
    diameter,
    is_2_connected,
    is_connected,
    minimal_2connected_spanning,
    parse_graph,
    serialize_graph,
)
from .oracle import (
    OracleResult,
    SearchBudget,
    cycle_reference_table,
    exact_rvc,
    find_rainbow_coloring,
    random_2connected,
)
from .verify import (
    RAINBOW,
    REVISED,
    Certificate,
    ColorStats,
    RainbowMode,
    color_stats,
    exists_rainbow_path,
    has_color_avoiding_connectivity,
    is_rainbow_path,
    serialize_certificate,
    verify_rainbow_vc,
)

__all__ = [
    "BlockDecomposition",
    "BudgetExceededError",
    "Certificate",
    "ColorStats",
    "Coloring",
    "ConstructionError",
    "DuplicateEdgeWarning",
    "Ear",
    "EarDecomposition",
    "Graph",
    "GraphFormatError",
    "OracleResult",
    "PaletteLedger",
    "PreconditionError",
    "RAINBOW",
    "REVISED",
    "RainbowMode",
    "SearchBudget",
    "SearchInconclusiveError",
    "attach_ear",
    "balanced_chain_coloring",
    "balanced_coloring",
    "block_bound",
    "block_coloring",
    "block_decomposition",
    "color_stats",
    "cut_vertices",
    "cycle_coloring",
    "cycle_reference_table",
    "cycle_rvc_value",
    "diameter",
    "ear_decomposition",
    "exact_rvc",
    "exists_rainbow_path",
    "find_initial_cycle",
    "find_rainbow_coloring",
    "has_color_avoiding_connectivity",
    "is_2_connected",
    "is_connected",
    "is_rainbow_path",
    "long_ear_coloring",
    "longest_ear",
    "minimal_2connected_spanning",
    "parse_coloring",
    "parse_graph",
    "random_2connected",
    "serialize_certificate",
    "serialize_coloring",
    "serialize_decomposition",
    "serialize_graph",
    "two_connected_coloring",
    "verify_rainbow_vc",
]

__version__ = "0.1.0"
