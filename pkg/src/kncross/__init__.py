"""Cross-index computations for 2-page drawings of complete graphs K_n."""
from .canonical import block_decomposition, canonical_matrix, verify_blocks
from .core import (
    Chord,
    DomainError,
    Page,
    PageMatrix,
    ValidationError,
    chords,
    chords_interleave,
    make_page_matrix,
    z_value,
)
from .cross_index import CrossingReport, crossing_report, edge_crossing_count, epsilon, sigma, sigma_tilde
from .freeness import (
    check_no_free_edges,
    find_free_hamiltonian_cycle,
    free_subgraph,
    verify_theorem_1,
)
from .optimizer import (
    AnnealConfig,
    SearchResult,
    delta_epsilon,
    exhaustive_min,
    reroute_witness_search,
    stochastic_min,
)
from .rerouted import (
    ExtendedDiagram,
    Reroute,
    build_dprime,
    check_lemma_3_2,
    extended_crossing_report,
    reroute_chord,
    tree_is_crossing_free,
)

__version__ = "0.1.0"
