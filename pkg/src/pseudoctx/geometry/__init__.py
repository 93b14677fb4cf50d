"""Vector labelings in R^3: verification, constructions and eigen-bounds."""
from .construction import (
    ALPHA_MAX,
    AssignmentError,
    ConstructionParams,
    DegenerateConstructionError,
    aperture_of_alpha,
    beta_of_alpha,
    combo_labels,
    construct_combo_for,
    construct_small_for,
    cube_representation,
    degenerate_alphas,
    find_degenerate_alpha,
    small_labels,
)
from .eigen import EigenDecomposition3, eigen_sym3
from .labeling import (
    DEFAULT_EPS,
    GRAM_EPS,
    ForReport,
    LabelingError,
    VectorLabeling,
    born_probabilities,
    default_eps,
    gram_equivalent,
    infer_hypergraph_from_labels,
    pairwise_overlaps,
    projector_sum,
    quantum_bounds,
    verify_for,
)

__all__ = [
    "ALPHA_MAX",
    "AssignmentError",
    "ConstructionParams",
    "DegenerateConstructionError",
    "aperture_of_alpha",
    "beta_of_alpha",
    "combo_labels",
    "construct_combo_for",
    "construct_small_for",
    "cube_representation",
    "degenerate_alphas",
    "find_degenerate_alpha",
    "small_labels",
    "EigenDecomposition3",
    "eigen_sym3",
    "DEFAULT_EPS",
    "GRAM_EPS",
    "ForReport",
    "LabelingError",
    "VectorLabeling",
    "born_probabilities",
    "default_eps",
    "gram_equivalent",
    "infer_hypergraph_from_labels",
    "pairwise_overlaps",
    "projector_sum",
    "quantum_bounds",
    "verify_for",
]
