"""Minimum spanning trees of weighted random graphs.

Node weights drive exponential edge capacities (rate = product of endpoint
weights); thresholding the capacities gives a monotone family of graphs,
and deleting non-bridges in decreasing capacity order gives their minimum
spanning forests.  The package provides the generators, the breadth-first
exploration walk, branching-process couplings, exact tree/graph metrics,
and replicated experiment campaigns that fit the scaling exponents.
"""

from .weights import (
    WeightVector,
    WeightStats,
    ConditionsReport,
    ConditionThresholds,
    make_constant,
    sample_iid,
    make_powerlaw,
    normalize_critical,
    check_conditions,
    stats,
    parse_law,
)
from .graphgen import (
    CapacityLimitError,
    GraphSnapshot,
    exact_capacities,
    poissonized_source,
    snapshot,
    p_critical,
    iid_capacities_on,
    write_edge_list,
    read_edge_list,
)
from .mst import Forest, kruskal, edge_deletion, forest_process, write_forest
from .exploration import (
    ExplorationTrace,
    bfw,
    size_biased_draw,
    excursion_components,
    exploration_forest,
    write_trace,
)
from .metrics import (
    ComponentStats,
    component_stats,
    tree_diameter,
    graph_diameter,
    typical_distance,
    excess_height_bound,
    diam_growth_bound,
    write_component_stats,
)
from .gw import (
    GWTree,
    CutConfig,
    offspring_mean,
    sample_gw,
    color_prune,
    edge_cut_prune,
    height_tail,
    snapshot_schedule,
    constant_labels,
    size_biased_labels,
)
from .experiments import (
    ExperimentConfig,
    ScalingResult,
    fit_loglog,
    run_phase_transition,
    run_critical_window,
    run_diameter_scaling,
    run_typical_distance,
    run_powerlaw,
    run_campaign,
    load_config,
)
from .seeding import derive_seed

__version__ = "0.1.0"
