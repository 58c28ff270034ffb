"""Divisive hierarchical community detection with game-theoretic edge weights."""

from .benchmark import BenchmarkSpec, benchmark_spec, generate
from .betweenness import (
    brute_betweenness,
    node_game_betweenness,
    sp_edge_betweenness,
)
from .criteria import (
    CriterionReport,
    Verdict,
    combined_compare,
    criterion_report,
    lex_compare,
)
from .divisive import Dendrogram, replay, run_divisive, select_sources
from .graph import Graph, Partition, SsspResult, bfs_sssp, connected_components
from .power import (
    GameParams,
    PowerVector,
    pair_weights,
    power_vector,
    semivalue_bruteforce,
    v_mod,
)
from .quality import MetricsVector, metrics_vector, modularity, nmi

__all__ = [
    "BenchmarkSpec",
    "CriterionReport",
    "Dendrogram",
    "GameParams",
    "Graph",
    "MetricsVector",
    "Partition",
    "PowerVector",
    "SsspResult",
    "Verdict",
    "benchmark_spec",
    "bfs_sssp",
    "brute_betweenness",
    "combined_compare",
    "connected_components",
    "criterion_report",
    "generate",
    "lex_compare",
    "metrics_vector",
    "modularity",
    "nmi",
    "node_game_betweenness",
    "pair_weights",
    "power_vector",
    "replay",
    "run_divisive",
    "select_sources",
    "semivalue_bruteforce",
    "sp_edge_betweenness",
    "v_mod",
]

__version__ = "0.1.0"
