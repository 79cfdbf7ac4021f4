"""Isometric path covers of complete multipartite and Hamming graphs.

Closed-form path counts, explicit optimal cover construction, an exact
branch-and-bound oracle for small graphs, and certificate verification.
"""

from .base_covers import (
    FAMILY_HAMMING2,
    FAMILY_HAMMING3,
    FAMILY_MULTIPARTITE,
    base_cover_lookup,
)
from .construct import (
    SliceEmbedding,
    cover_hamming2,
    cover_hamming3,
    cover_multipartite,
    embed_cover,
)
from .cover import (
    Cover,
    Path,
    PathVerdict,
    VerifyReport,
    canonical_path,
    cover_size,
    covered_set,
    format_cover,
    format_cover_labeled,
    is_isometric_path,
    parse_cover,
    parse_cover_labeled,
    verify_cover,
)
from .errors import (
    ConstructionError,
    DisconnectedGraphError,
    FormatError,
    FormulaConflictError,
    InvalidPairingError,
    InvalidSpecError,
    OutOfRangeError,
    PoolBudgetError,
    UnknownCoverKeyError,
)
from .formulas import (
    FormulaResult,
    ip_complete,
    ip_hamming2,
    ip_hamming3,
    ip_lower_bound_hamming,
    ip_lower_bound_multipartite,
    ip_multipartite,
    odd_part_count,
)
from .graph import (
    DistanceMatrix,
    Graph,
    HammingSpec,
    PartiteSpec,
    all_pairs_distances,
    decode_coordinates,
    encode_coordinates,
    format_graph,
    make_augmented_multipartite,
    make_complete_multipartite,
    make_hamming,
    parse_graph,
)
from .solver import (
    PathPool,
    SolveResult,
    enumerate_isometric_paths,
    greedy_cover,
    solve_min_cover,
)

__version__ = "0.1.0"
