"""Decks of small graphs: deck arithmetic, deck-determined invariants, and
acyclicity recognition, with exhaustive verification at desk scale."""

from .canon import CanonicalCode, are_isomorphic, canonical_code, canonical_form
from .decks import (
    Deck,
    compute_deck,
    count_induced_from_deck,
    deck_equal,
    deck_from_text,
    deck_to_text,
    subdeck,
)
from .errors import (
    CapExceededError,
    DeckFormatError,
    Graph6Error,
    GraphDeckError,
    IllegitimateDeckError,
    PreconditionError,
)
from .generate import enumerate_graphs
from .graphs import (
    INF,
    Graph,
    GraphMetrics,
    complete_graph,
    components,
    cycle_graph,
    delete_vertex,
    disjoint_union,
    distances_from,
    empty_graph,
    induced_subgraph,
    is_acyclic,
    is_connected,
    is_tree,
    k_ball,
    k_subset_masks,
    metrics,
    parse_graph6,
    path_graph,
    read_graph6_stream,
    relabel,
    write_graph6,
    write_graph6_stream,
)
from .recognize import (
    MixedClass,
    RecognitionReport,
    ReconstructionSearchResult,
    Verdict,
    VerifySummary,
    ambiguous_pair_checks,
    consequence_checks,
    exception_pair,
    full_source,
    nydl_pair,
    recognize,
    reconstruct_all,
    restricted_source,
    sharpness_pair,
    two_cycle_pair,
    two_path_pair,
    verify_recognizability,
)
from .vines import (
    AbsorbingFamily,
    MaximalCountTable,
    ShortCardStats,
    build_spider,
    connected_family,
    count_k_central_edges_from_deck,
    count_k_centers_from_deck,
    count_long_paths,
    count_maximal_from_deck,
    degree_list_from_deck,
    evine_family,
    is_k_evine,
    is_k_vine,
    k_central_edges,
    k_centers,
    short_card_stats,
    star_family,
    vine_family,
)

__version__ = "0.1.0"

__all__ = [
    "AbsorbingFamily",
    "CanonicalCode",
    "CapExceededError",
    "Deck",
    "DeckFormatError",
    "Graph",
    "Graph6Error",
    "GraphDeckError",
    "GraphMetrics",
    "INF",
    "IllegitimateDeckError",
    "MaximalCountTable",
    "MixedClass",
    "PreconditionError",
    "RecognitionReport",
    "ReconstructionSearchResult",
    "ShortCardStats",
    "Verdict",
    "VerifySummary",
    "ambiguous_pair_checks",
    "are_isomorphic",
    "build_spider",
    "canonical_code",
    "canonical_form",
    "complete_graph",
    "components",
    "compute_deck",
    "connected_family",
    "consequence_checks",
    "count_induced_from_deck",
    "count_k_central_edges_from_deck",
    "count_k_centers_from_deck",
    "count_long_paths",
    "count_maximal_from_deck",
    "cycle_graph",
    "deck_equal",
    "deck_from_text",
    "deck_to_text",
    "degree_list_from_deck",
    "delete_vertex",
    "disjoint_union",
    "distances_from",
    "empty_graph",
    "enumerate_graphs",
    "evine_family",
    "exception_pair",
    "full_source",
    "induced_subgraph",
    "is_acyclic",
    "is_connected",
    "is_k_evine",
    "is_k_vine",
    "is_tree",
    "k_ball",
    "k_subset_masks",
    "k_central_edges",
    "k_centers",
    "metrics",
    "nydl_pair",
    "parse_graph6",
    "path_graph",
    "read_graph6_stream",
    "recognize",
    "reconstruct_all",
    "relabel",
    "restricted_source",
    "sharpness_pair",
    "short_card_stats",
    "star_family",
    "subdeck",
    "two_cycle_pair",
    "two_path_pair",
    "verify_recognizability",
    "vine_family",
    "write_graph6",
    "write_graph6_stream",
]
