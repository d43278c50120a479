"""Quantifying dynamic graph evolution through centrality distances.

The library compares each observed transition of a snapshot trace against
random evolutions of the same magnitude (graph edit distance) and summarizes
a trace as a dynamic signature: the fraction of transitions that are
statistical outliers, per centrality.
"""

from .centrality import (
    CentralityKind,
    CentralityVector,
    PagerankConfig,
    PagerankConvergenceError,
    betweenness_centrality,
    centrality,
    closeness_centrality,
    cluster_centrality,
    degree_centrality,
    ego_centrality,
    pagerank_centrality,
)
from .dynamics import (
    DynamicSignature,
    NullModelKind,
    SamplerConfig,
    TransitionAnalysis,
    analyze_transition,
    chronogram,
    is_outlier,
    sample_degree_preserving,
    sample_uniform,
    signature,
)
from .generators import GeneratorConfig, GeneratorModel, generate
from .graph import Snapshot, Trace, UnknownVertexError, align_universe, neighbors
from .metrics import UniverseMismatchError, centrality_distance, ged
from .traceio import (
    BinningMode,
    BinningPolicy,
    TraceParseError,
    export_chronogram,
    export_signature,
    parse_temporal_edge_list,
    write_trace_edge_list,
)

__all__ = [
    "BinningMode",
    "BinningPolicy",
    "CentralityKind",
    "CentralityVector",
    "DynamicSignature",
    "GeneratorConfig",
    "GeneratorModel",
    "NullModelKind",
    "PagerankConfig",
    "PagerankConvergenceError",
    "SamplerConfig",
    "Snapshot",
    "Trace",
    "TraceParseError",
    "TransitionAnalysis",
    "UniverseMismatchError",
    "UnknownVertexError",
    "align_universe",
    "analyze_transition",
    "betweenness_centrality",
    "centrality",
    "centrality_distance",
    "chronogram",
    "closeness_centrality",
    "cluster_centrality",
    "degree_centrality",
    "ego_centrality",
    "export_chronogram",
    "export_signature",
    "ged",
    "generate",
    "is_outlier",
    "neighbors",
    "pagerank_centrality",
    "parse_temporal_edge_list",
    "sample_degree_preserving",
    "sample_uniform",
    "signature",
    "write_trace_edge_list",
]

__version__ = "0.1.0"
