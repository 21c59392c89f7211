"""stablecore: stability structure of trees and an executable claim harness.

The library computes maximum stable sets, the core (their intersection),
matchings, pendant interaction and vertex bonding on trees, keeps
independent brute-force reference paths for all of it, and runs a registry
of structural claims over exhaustive or seeded-random tree corpora.
"""

from .bonding import BondResult, map_set, spider, vertex_bond
from .errors import (
    EmptyResult,
    LimitExceeded,
    NotATree,
    NotPendant,
    NotStable,
    OutOfRange,
    ParseError,
    ScaleExceeded,
    StablecoreError,
    TooLarge,
    TooSmall,
)
from .graph_model import (
    Bipartition,
    Forest,
    ForestComponent,
    SplitMix64,
    Tree,
    bfs_depths,
    bipartition,
    canonical_form,
    delete_vertices,
    derive_seed,
    distance,
    enumerate_labeled_trees,
    labeled_tree_count,
    pendant_vertices,
    prufer_decode,
    prufer_encode,
    random_tree,
    tree_from_edges,
)
from .harness import (
    CLAIM_IDS,
    ClaimResult,
    CorpusSpec,
    Verdict,
    check_tree,
    corpus_size,
    corpus_tree,
    fig1_graph,
    fig5_tree,
    iter_corpus,
    run_claim,
    run_suite,
    serialize_tree,
    tree_from_serialization,
)
from .independence import (
    AnalysisReport,
    BruteForceResult,
    SmallGraph,
    alpha,
    alpha_forest,
    analyze,
    brute_force_stability,
    core,
    core_naive,
    count_maximum_stable_sets,
    enumerate_maximal_stable_sets,
    enumerate_maximum_stable_sets,
    extend_pendant_set,
    has_perfect_matching,
    is_strong_unique_by_definition,
    is_strong_unique_independent,
    mu,
    one_maximum_stable_set,
    small_graph_from_edges,
    small_graph_from_tree,
)

__version__ = "0.1.0"
