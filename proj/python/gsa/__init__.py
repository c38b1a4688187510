"""Min/max partitions of input-consistent labelled graphs."""

from ._gsa import (
    Graph,
    InvariantViolation,
    compute_tau,
    format_graph,
    generate,
    max_partition,
    min_partition,
    minmax_partition,
    oracle_minmax,
    oracle_partition,
    parse_graph,
    read_graph_file,
    transpose_alphabet,
    trim,
    validate,
)

__all__ = [
    "Graph",
    "InvariantViolation",
    "compute_tau",
    "format_graph",
    "generate",
    "max_partition",
    "min_partition",
    "minmax_partition",
    "oracle_minmax",
    "oracle_partition",
    "parse_graph",
    "read_graph_file",
    "transpose_alphabet",
    "trim",
    "validate",
]
