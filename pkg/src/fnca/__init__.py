"""Agent-based local modularity maximization for community detection."""

__version__ = "0.1.0"

from .engine import (
    AgentState,
    ClusterResult,
    EngineConfig,
    OrderPolicy,
    StopReason,
    candidate_labels,
    init_labels,
    run,
    run_many,
    select_label,
    sweep,
)
from .generator import PlantedGraph, RnSpec, generate_rn, planted_modularity, validate_planted
from .graph import Graph, GraphError, build_graph, neighbors
from .metrics import AccuracyReport, accuracy, summarize_runs
from .modularity import (
    Labeling,
    ModularityError,
    apply_move,
    delta_q,
    local_f,
    modularity_pairwise,
    modularity_q,
)

__all__ = [
    "AccuracyReport",
    "AgentState",
    "ClusterResult",
    "EngineConfig",
    "Graph",
    "GraphError",
    "Labeling",
    "ModularityError",
    "OrderPolicy",
    "PlantedGraph",
    "RnSpec",
    "StopReason",
    "accuracy",
    "apply_move",
    "build_graph",
    "candidate_labels",
    "delta_q",
    "generate_rn",
    "init_labels",
    "local_f",
    "modularity_pairwise",
    "modularity_q",
    "neighbors",
    "planted_modularity",
    "run",
    "run_many",
    "select_label",
    "summarize_runs",
    "sweep",
    "validate_planted",
]
