"""pathmine: shortest-path transaction mining over social graphs.

Pipeline: parse an edge list -> run single-source shortest paths from all or
sampled sources -> treat each path as a transaction -> count consecutive
vertex n-grams and mine frequent itemsets (FP-Growth) -> report how path
occupancy relates to degree and clustering structure.
"""

from .errors import ParseError, PathmineError, ValidationError
from .fpgrowth import (
    FpTree,
    FrequentPattern,
    brute_force_frequent,
    build_fptree,
    mine,
    patterns_csv,
)
from .graph import (
    ClusteringStats,
    Graph,
    clustering,
    degree_histogram,
    export_dot,
    from_edges,
    load_edge_list,
    parse_edge_list,
    to_edge_list,
)
from .report import (
    StatsReport,
    VertexFrequencyRecord,
    build_report,
    correlate_degree_frequency,
    top_degree_share,
    write_report,
)
from .transactions import (
    NGramCounts,
    TransactionDb,
    count_ngrams,
    ngram_counts_csv,
    parse_db,
    serialize_db,
    validate_db,
    vertex_frequency,
)
from .traversal import (
    SourceSample,
    SsspResult,
    reconstruct_path,
    run_traversals,
    sample_sources,
    sssp,
)
from .cli import RunConfig, run_pipeline

__version__ = "0.1.0"

__all__ = [
    "ClusteringStats",
    "FpTree",
    "FrequentPattern",
    "Graph",
    "NGramCounts",
    "ParseError",
    "PathmineError",
    "RunConfig",
    "SourceSample",
    "SsspResult",
    "StatsReport",
    "TransactionDb",
    "ValidationError",
    "VertexFrequencyRecord",
    "brute_force_frequent",
    "build_fptree",
    "build_report",
    "clustering",
    "correlate_degree_frequency",
    "count_ngrams",
    "degree_histogram",
    "export_dot",
    "from_edges",
    "load_edge_list",
    "mine",
    "ngram_counts_csv",
    "parse_db",
    "parse_edge_list",
    "patterns_csv",
    "reconstruct_path",
    "run_pipeline",
    "run_traversals",
    "sample_sources",
    "serialize_db",
    "sssp",
    "to_edge_list",
    "top_degree_share",
    "validate_db",
    "vertex_frequency",
    "write_report",
]
