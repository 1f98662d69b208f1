"""Bounded-expansion toolkit: grad, augmentations, tree-depth and low tree-depth colorings."""
from .augmentation import (
    AugmentationTrace,
    ab_augment,
    ab_reachable_pairs,
    augment_sequence,
    is_transitive_fraternal_closed,
    tight_augment,
)
from .decomposition import (
    StepBudget,
    chi_p_exact,
    pipeline_coloring,
    product_coloring,
    step_budget,
    verify_low_treedepth,
)
from .density import degeneracy_order, densest_subgraph, greedy_color, max_density, orient_min_indegree
from .errors import GraphError, GuardExceeded, NotCentered, ParseError
from .graph import (
    Coloring,
    Digraph,
    Graph,
    RootedForest,
    Verdict,
    closure,
    connected_components,
    lex_product,
    radius_and_center,
)
from .gradlab import (
    BallFamily,
    ExpansionProfile,
    expansion_profile,
    grad_complexity_exact,
    grad_exact,
    grad_lower_bound,
    quotient,
)
from .io import parse_digraph, parse_graph, serialize_graph
from .treedepth import (
    TreedepthResult,
    connected_induced_subgraphs,
    forest_from_centered_coloring,
    is_centered_coloring,
    treedepth_exact,
    verify_p_centered,
)

__version__ = "0.1.0"
