"""Exact desk-scale tools for tree-independence number, alpha-treedepth,
strong brambles and wheel induced minors."""

from .brambles import StrongBramble, alpha_order_exact, bramble_from_linked_set, is_strong_bramble, strong_bramble_of_order
from .constructions import CrossingGrid, cross_order_lower_bound, crossing_grid
from .domination import dominating_cycle_or_vertex, dominating_path, long_dominating_cycle
from .graph import (
    Graph,
    GraphFormatError,
    InvariantViolation,
    PreconditionError,
    SizeCapError,
    Verdict,
    clique_number,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    empty_graph,
    independence_number,
    is_chordal,
    path_graph,
    star_graph,
)
from .induced_minor import (
    InducedMinorModel,
    cycle_vicinity_decomposition,
    detect_wheel,
    find_induced_minor,
    is_model,
    minimize_model,
    wheel_from_cycle,
    wheel_graph,
)
from .io import emit_graph6, parse_dimacs, parse_graph6
from .treedepth import (
    EliminationForest,
    alpha_depth,
    alpha_td_exact,
    gyarfas_elimination,
    kdd_elimination,
    path_elimination_tree,
)
from .width import (
    Bounds,
    TreeDecomposition,
    alpha_tw_exact,
    alpha_width,
    balanced_separator,
    check_tree_decomposition,
    find_k_alpha_linked,
    refine_decomposition,
    treewidth_exact,
)

__version__ = "0.1.0"
