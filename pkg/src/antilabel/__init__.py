"""Graph labelings that maximize the smallest label gap across edges.

The package computes anti-k-labeling numbers via chromatic numbers, no-hole
(bijective) labeling numbers with constructive labelers for standard graph
families, and integer separation labelings with distance-two constraints.
Exact search oracles cross-check every closed form on small instances.
"""

from .antik import (
    InvalidLabelingError,
    Labeling,
    LabelingReport,
    anti_k_number,
    brute_force_anti_k_number,
    construct_anti_k_labeling,
    evaluate_labeling,
    parse_labeling,
    serialize_labeling,
)
from .budget import DEFAULT_NODE_BUDGET, BudgetExceededError, NodeBudget
from .coloring import Coloring, chromatic_number, greedy_coloring, hamiltonian_path
from .graphs import (
    Bipartition,
    FamilySpec,
    Graph,
    ParseError,
    bipartition,
    complement,
    complete_multipartite,
    cycle,
    generate,
    grid,
    hypercube,
    join,
    parse_graph,
    path,
    pendant_star,
    random_tree,
    serialize_graph,
    star,
    union,
)
from .l21 import (
    AntiL21Bound,
    anti_l21_lower_bound,
    anti_l21_number,
    distance_two_pairs,
    lambda_bracket,
    lambda_number,
)
from .nohole import (
    Bound,
    BoundSet,
    complement_hamiltonian_labeling,
    cycle_labeling,
    exact_nohole_number,
    grid_labeling,
    hypercube_labeling,
    nohole_upper_bound,
    nohole_upper_bound_terms,
    path_labeling,
    tree_labeling,
)

__all__ = [
    "AntiL21Bound",
    "Bipartition",
    "Bound",
    "BoundSet",
    "BudgetExceededError",
    "Coloring",
    "DEFAULT_NODE_BUDGET",
    "FamilySpec",
    "Graph",
    "InvalidLabelingError",
    "Labeling",
    "LabelingReport",
    "NodeBudget",
    "ParseError",
    "anti_k_number",
    "anti_l21_lower_bound",
    "anti_l21_number",
    "bipartition",
    "brute_force_anti_k_number",
    "chromatic_number",
    "complement",
    "complement_hamiltonian_labeling",
    "complete_multipartite",
    "construct_anti_k_labeling",
    "cycle",
    "cycle_labeling",
    "distance_two_pairs",
    "evaluate_labeling",
    "exact_nohole_number",
    "generate",
    "greedy_coloring",
    "grid",
    "grid_labeling",
    "hamiltonian_path",
    "hypercube",
    "hypercube_labeling",
    "join",
    "lambda_bracket",
    "lambda_number",
    "nohole_upper_bound",
    "nohole_upper_bound_terms",
    "parse_graph",
    "parse_labeling",
    "path",
    "path_labeling",
    "pendant_star",
    "random_tree",
    "serialize_graph",
    "serialize_labeling",
    "star",
    "tree_labeling",
    "union",
]

__version__ = "0.1.0"
