"""Negative sequential patterns: containment semantics, partial orders,
verification scans, and frequent-pattern mining with provably safe pruning."""

from .model import (
    Dictionary,
    EMPTY_ITEMSET,
    EmbeddingKind,
    EmptyPositiveError,
    InvalidTokenError,
    Itemset,
    NegMode,
    NegPattern,
    Negative,
    NegseqError,
    NonInclusion,
    Occurrence,
    Sequence,
    SequenceDatabase,
    Theta,
    THETAS,
    has_negatives,
    has_slot_modes,
    make_itemset,
    pattern_length,
    pattern_violations,
    positive_part,
    singleton_negatives_only,
    validate_pattern,
)
from .matching import (
    DEFAULT_EMBEDDING_CAP,
    Embedding,
    MatchReport,
    NotAPositiveEmbeddingError,
    all_theta_supports,
    check_embedding,
    contains,
    gap_union,
    is_contained,
    non_inclusion,
    positive_embeddings,
    support,
    theta_bits,
)
from .orders import (
    AntiMonotonicityReport,
    ContainmentGrid,
    Counterexample,
    Dominance,
    DominanceReport,
    DominanceTable,
    EmptySpaceError,
    EquivalenceReport,
    OrderKind,
    SpaceBounds,
    Verdict,
    VerificationSpace,
    anti_monotonicity_scan,
    default_space,
    dominance_scan,
    embed_incl,
    enumerate_sequences,
    equivalence_classes,
    known_dominance,
    neg_ext,
    pattern_order,
    prefix_incl,
    verify_anti_monotonicity,
    verify_dominance,
    verify_equivalence,
    verify_invariants,
)
from .mining import (
    MiningResult,
    MiningStats,
    PatternBounds,
    UnsupportedThetaError,
    enumerate_patterns,
    mine_bruteforce,
    mine_pruned,
)
from .textio import (
    DatabaseParseError,
    EmptyItemsetError,
    PatternSyntaxError,
    StructureError,
    dump_database,
    load_database,
    parse_database,
    parse_pattern,
    parse_sequence,
    render_pattern,
    render_sequence,
    save_database,
)

__version__ = "0.1.0"
