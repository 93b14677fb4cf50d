"""Quantum-logic hypergraphs: two-valued states, pseudocontexts and 3D orthogonal representations."""
from .hypergraph import Hypergraph, HypergraphError, parse_hypergraph, serialize, validate, vertex_degrees
from .pseudocontext import (
    PreconditionError,
    PseudocontextCertificate,
    classical_bounds,
    classify_gadget,
    find_coverings,
    find_pseudocontext_pairs,
    verify_pseudocontext_pair,
)
from .states import (
    PartitionRepresentation,
    StateSet,
    edges_from_partition,
    enumerate_two_valued_states,
    find_rainbow_coloring,
    is_separating,
    partition_representation,
    state_from_coloring,
)

__version__ = "0.1.0"

__all__ = [
    "Hypergraph",
    "HypergraphError",
    "parse_hypergraph",
    "serialize",
    "validate",
    "vertex_degrees",
    "PreconditionError",
    "PseudocontextCertificate",
    "classical_bounds",
    "classify_gadget",
    "find_coverings",
    "find_pseudocontext_pairs",
    "verify_pseudocontext_pair",
    "PartitionRepresentation",
    "StateSet",
    "edges_from_partition",
    "enumerate_two_valued_states",
    "find_rainbow_coloring",
    "is_separating",
    "partition_representation",
    "state_from_coloring",
]
