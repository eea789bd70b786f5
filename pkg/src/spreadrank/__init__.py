"""Spreader-ranking toolkit: gravity/cycle hybrid scores, classic
centralities, SIR ground truth, and ranking-agreement metrics."""

__version__ = "0.1.0"

from .graph import (  # noqa: F401
    Graph,
    GraphStats,
    ParseError,
    graph_stats,
    hop_distances_from,
    load_edge_list,
    parse_edge_list,
)
from .effective_distance import (  # noqa: F401
    EffectiveDistanceMap,
    effective_distances_from,
    one_hop_effective_distance,
)
from .ranking import ScoreMap, ranking_csv  # noqa: F401
from .centrality import (  # noqa: F401
    betweenness_centrality,
    closeness_centrality,
    degree_centrality,
    k_shell,
    local_gravity_model,
    restricted_degree_propagation,
)
from .cycles import (  # noqa: F401
    CycleNumberMatrix,
    CycleSet,
    cycle_number_matrix,
    cycle_ratio,
    enumerate_shortest_cycles,
)
from .hgc import (  # noqa: F401
    HgcComponents,
    HgcConfig,
    balancing_factor,
    constraint_coefficients,
    gm_scores,
    hgc_components,
    hgc_scores,
    rcp_scores,
)
from .sir import (  # noqa: F401
    MeanTrajectory,
    SirConfig,
    SirSummary,
    SirTrajectory,
    epidemic_threshold,
    simulate_once,
    spreading_influence,
    top_k_trajectory,
)
from .metrics import (  # noqa: F401
    EvalReport,
    evaluate_method,
    jaccard_top_k,
    kendall_tau,
    monotonicity,
)
from .bench import (  # noqa: F401
    METHOD_NAMES,
    BenchmarkSpec,
    DatasetError,
    RunManifest,
    compute_scores,
    run_evaluate,
)
