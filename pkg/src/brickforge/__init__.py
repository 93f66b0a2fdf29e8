"""Matching covered graph toolkit.

Perfect matching enumeration, tight cut decomposition into bricks and
braces, removability and b-invariance classification of edges, generators
for the classic cubic families, and an exhaustive verification sweep over
small cubic graphs, all on a loopless multigraph substrate.
"""

from .edgeclass import (
    ChainDecomposition,
    EdgeClassification,
    EdgeKind,
    b_invariant_count,
    chain_decomposition,
    classify_edges,
    equivalence_classes,
    is_near_bipartite,
    is_removable,
    mutually_exclusive,
    removable_doubletons,
    shared_vertex_doubleton_check,
)
from .errors import BrickforgeError
from .families import enumerate_cubic, generate
from .graphcore import (
    Bipartition,
    MultiGraph,
    bipartition,
    contract_shore,
    cut_edges,
    edge_connectivity,
    is_connected,
    is_cubic,
    is_essentially_4ec_cubic,
    is_isomorphic,
    validate_multigraph,
    vertex_connectivity_at_least,
)
from .matching import (
    DMWitness,
    PMCatalog,
    allowed_edges,
    dm_witness,
    enumerate_perfect_matchings,
    has_perfect_matching,
    is_bicritical,
    is_matching_covered,
)
from .tightcut import (
    DecompositionResult,
    brick_number,
    find_nontrivial_tight_cut,
    is_brace,
    is_brick,
    is_separating_cut,
    is_tight_cut,
    petersen_count,
    seeded_policy,
    tight_cut_decomposition,
)

__all__ = [
    "Bipartition",
    "BrickforgeError",
    "ChainDecomposition",
    "DMWitness",
    "DecompositionResult",
    "EdgeClassification",
    "EdgeKind",
    "MultiGraph",
    "PMCatalog",
    "allowed_edges",
    "b_invariant_count",
    "bipartition",
    "brick_number",
    "chain_decomposition",
    "classify_edges",
    "contract_shore",
    "cut_edges",
    "dm_witness",
    "edge_connectivity",
    "enumerate_cubic",
    "enumerate_perfect_matchings",
    "equivalence_classes",
    "find_nontrivial_tight_cut",
    "generate",
    "has_perfect_matching",
    "is_bicritical",
    "is_brace",
    "is_brick",
    "is_connected",
    "is_cubic",
    "is_essentially_4ec_cubic",
    "is_isomorphic",
    "is_matching_covered",
    "is_near_bipartite",
    "is_removable",
    "is_separating_cut",
    "is_tight_cut",
    "mutually_exclusive",
    "petersen_count",
    "removable_doubletons",
    "seeded_policy",
    "shared_vertex_doubleton_check",
    "tight_cut_decomposition",
    "validate_multigraph",
    "vertex_connectivity_at_least",
]

__version__ = "0.1.0"
