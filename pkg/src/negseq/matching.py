"""The eight containment relations between negative patterns and sequences.

Builds up from itemset non-inclusion through soft/strict embeddings and
weak/strong occurrence to support counting. All functions are pure; support
over a database could be evaluated per sequence in parallel without changing
the count, though this implementation is sequential.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .model import (
    EmbeddingKind,
    Itemset,
    NegMode,
    NegPattern,
    NegseqError,
    NonInclusion,
    Occurrence,
    Sequence,
    SequenceDatabase,
    Theta,
    THETAS,
)

# An embedding is a strictly increasing tuple of 1-based sequence positions,
# one per positive itemset of the pattern it embeds.
Embedding = tuple[int, ...]

# contains() stops counting positive embeddings here; the verdict itself is
# exact whenever enumeration finishes within the cap.
DEFAULT_EMBEDDING_CAP = 10**6


class NotAPositiveEmbeddingError(NegseqError):
    """The tuple is not an embedding of the pattern's positive part."""


def non_inclusion(p: Itemset, i: Itemset, kind: NonInclusion) -> bool:
    """Partial: some item of ``p`` is missing from ``i``. Total: disjointness.

    The empty itemset is non-included in everything, under both kinds.
    """
    if not p:
        return True
    if kind is NonInclusion.PARTIAL:
        return p.mask & ~i.mask != 0
    return p.mask & i.mask == 0


def _iter_embeddings(pos_masks: list[int], seq_masks: list[int]) -> Iterator[Embedding]:
    """All placements of the positives, in lexicographic position order."""
    m = len(pos_masks)
    n = len(seq_masks)
    if m == 0 or n < m:
        return
    current = [0] * m

    def descend(i: int, start: int) -> Iterator[Embedding]:
        pmask = pos_masks[i]
        last = i + 1 == m
        for j in range(start, n - (m - 1 - i)):
            if pmask & ~seq_masks[j] == 0:
                current[i] = j + 1
                if last:
                    yield tuple(current)
                else:
                    yield from descend(i + 1, j + 1)

    yield from descend(0, 0)


def positive_embeddings(pplus: NegPattern, s: Sequence) -> list[Embedding]:
    """Every embedding of a positive pattern, in lexicographic order.

    ``pplus`` must carry no negative constraints; use
    :func:`negseq.model.positive_part` first if it does.
    """
    if any(negative.itemset for negative in pplus.negatives):
        raise ValueError("positive_embeddings expects a pattern without negatives")
    return list(
        _iter_embeddings(
            [p.mask for p in pplus.positives], [it.mask for it in s.itemsets]
        )
    )


def gap_union(s: Sequence, e: Embedding, slot: int) -> Itemset:
    """Union of the itemsets strictly between positions e[slot] and e[slot+1].

    ``slot`` is 1-based and must satisfy 1 <= slot < len(e). Adjacent
    positions yield the empty itemset.
    """
    if not 1 <= slot < len(e):
        raise ValueError(f"slot must be in [1, {len(e) - 1}], got {slot}")
    lo, hi = e[slot - 1], e[slot]
    if not 1 <= lo < hi <= len(s):
        raise ValueError(f"positions {e!r} are out of order or out of range")
    mask = 0
    for index in range(lo, hi - 1):
        mask |= s.itemsets[index].mask
    return Itemset(mask)


def _slot_semantics(
    mode: NegMode | None, embedding: EmbeddingKind, nonincl: NonInclusion
) -> tuple[EmbeddingKind, NonInclusion]:
    """Effective (embedding, non-inclusion) for one slot.

    The TOTAL mode evaluates as strict, which equals soft under total
    non-inclusion.
    """
    if mode is None:
        return embedding, nonincl
    if mode is NegMode.SOFT_PARTIAL:
        return EmbeddingKind.SOFT, NonInclusion.PARTIAL
    if mode is NegMode.STRICT_PARTIAL:
        return EmbeddingKind.STRICT, NonInclusion.PARTIAL
    return EmbeddingKind.STRICT, NonInclusion.TOTAL


def _slot_ok(
    qmask: int,
    gaps: list[int],
    embedding: EmbeddingKind,
    nonincl: NonInclusion,
) -> bool:
    if qmask == 0:
        return True
    if embedding is EmbeddingKind.STRICT:
        union = 0
        for g in gaps:
            union |= g
        if nonincl is NonInclusion.PARTIAL:
            return qmask & ~union != 0
        return qmask & union == 0
    if nonincl is NonInclusion.PARTIAL:
        return all(qmask & ~g for g in gaps)
    return all(qmask & g == 0 for g in gaps)


def _embedding_pass(
    p: NegPattern,
    seq_masks: list[int],
    e: Embedding,
    embedding: EmbeddingKind,
    nonincl: NonInclusion,
) -> bool:
    for i, negative in enumerate(p.negatives):
        qmask = negative.itemset.mask
        if not qmask:
            continue
        emb, incl = _slot_semantics(negative.mode, embedding, nonincl)
        gaps = seq_masks[e[i] : e[i + 1] - 1]
        if not _slot_ok(qmask, gaps, emb, incl):
            return False
    return True


def _require_positive_embedding(
    e: Embedding, p: NegPattern, seq_masks: list[int]
) -> None:
    k = len(p.positives)
    n = len(seq_masks)
    if len(e) != k:
        raise NotAPositiveEmbeddingError(
            f"expected {k} positions, got {len(e)}"
        )
    prev = 0
    for position, positive in zip(e, p.positives):
        if not prev < position <= n:
            raise NotAPositiveEmbeddingError(
                f"positions {e!r} are not strictly increasing within [1, {n}]"
            )
        if positive.mask & ~seq_masks[position - 1]:
            raise NotAPositiveEmbeddingError(
                f"positive itemset is not included at position {position}"
            )
        prev = position


def check_embedding(
    e: Embedding,
    p: NegPattern,
    s: Sequence,
    embedding: EmbeddingKind,
    nonincl: NonInclusion,
) -> bool:
    """Does embedding ``e`` satisfy the negative constraints of ``p`` in ``s``?

    Soft checks each gap itemset individually; strict checks the gap union.
    ``e`` must embed the positive part (raises NotAPositiveEmbeddingError
    otherwise). A slot with an explicit mode is evaluated under that mode
    regardless of the arguments.
    """
    seq_masks = [it.mask for it in s.itemsets]
    _require_positive_embedding(e, p, seq_masks)
    return _embedding_pass(p, seq_masks, e, embedding, nonincl)


@dataclass(frozen=True, slots=True)
class MatchReport:
    """Outcome of one containment test.

    ``witness`` is the first embedding (lexicographically) satisfying the
    negatives, ``violator`` the first that does not; either may be None. The
    embedding count saturates at the enumeration cap passed to
    :func:`contains`.
    """

    contained: bool
    witness: Embedding | None
    violator: Embedding | None
    total_positive_embeddings: int


def contains(
    p: NegPattern,
    s: Sequence,
    theta: Theta,
    *,
    embedding_cap: int = DEFAULT_EMBEDDING_CAP,
) -> MatchReport:
    """Containment of ``p`` in ``s`` under ``theta``, with full reporting.

    Weak occurrence holds when some positive embedding satisfies the
    negatives; strong occurrence requires at least one positive embedding and
    that all of them satisfy the negatives. A pattern whose positive part
    does not occur is not contained under either occurrence.
    """
    seq_masks = [it.mask for it in s.itemsets]
    pos_masks = [positive.mask for positive in p.positives]
    witness: Embedding | None = None
    violator: Embedding | None = None
    total = 0
    for e in _iter_embeddings(pos_masks, seq_masks):
        total += 1
        if _embedding_pass(p, seq_masks, e, theta.embedding, theta.non_inclusion):
            if witness is None:
                witness = e
        elif violator is None:
            violator = e
        if total >= embedding_cap:
            break
    if theta.occurrence is Occurrence.WEAK:
        contained = witness is not None
    else:
        contained = total > 0 and violator is None
    return MatchReport(contained, witness, violator, total)


def _contained_quick(
    p: NegPattern, pos_masks: list[int], seq_masks: list[int], theta: Theta
) -> bool:
    """Decision-only containment; short-circuits on the first witness/violator."""
    weak = theta.occurrence is Occurrence.WEAK
    seen_any = False
    for e in _iter_embeddings(pos_masks, seq_masks):
        seen_any = True
        ok = _embedding_pass(p, seq_masks, e, theta.embedding, theta.non_inclusion)
        if weak and ok:
            return True
        if not weak and not ok:
            return False
    return seen_any and not weak


def is_contained(p: NegPattern, s: Sequence, theta: Theta) -> bool:
    """Boolean form of :func:`contains`, with short-circuit evaluation."""
    return _contained_quick(
        p,
        [positive.mask for positive in p.positives],
        [it.mask for it in s.itemsets],
        theta,
    )


def support(p: NegPattern, db: SequenceDatabase, theta: Theta) -> int:
    """Number of database sequences that contain ``p`` under ``theta``."""
    pos_masks = [positive.mask for positive in p.positives]
    count = 0
    for s in db.sequences:
        if _contained_quick(p, pos_masks, [it.mask for it in s.itemsets], theta):
            count += 1
    return count


def _slot_pass4(qmask: int, mode: NegMode | None, gaps: list[int]) -> int:
    """4-bit slot outcome over the combos (strict/soft x partial/total).

    Bit c follows negseq.model.COMBOS order. A slot with a pinned mode either
    passes for all four combos or fails for all four.
    """
    if qmask == 0:
        return 0b1111
    if mode is not None:
        emb, incl = _slot_semantics(mode, EmbeddingKind.STRICT, NonInclusion.TOTAL)
        return 0b1111 if _slot_ok(qmask, gaps, emb, incl) else 0
    union = 0
    soft_partial = True
    soft_total = True
    for g in gaps:
        if qmask & ~g == 0:
            soft_partial = False
        if qmask & g:
            soft_total = False
        union |= g
    bits = 0
    if qmask & ~union:
        bits |= 1  # strict partial
    if soft_partial:
        bits |= 2
    if qmask & union == 0:
        bits |= 4  # strict total
    if soft_total:
        bits |= 8
    return bits


def theta_bits(p: NegPattern, s: Sequence) -> int:
    """Containment under all eight relations at once.

    Bit t is set iff ``p`` is contained in ``s`` under ``THETAS[t]``. Used by
    the verification scans and the all-thetas reports, which would otherwise
    re-enumerate embeddings eight times.
    """
    seq_masks = [it.mask for it in s.itemsets]
    pos_masks = [positive.mask for positive in p.positives]
    negatives = p.negatives
    any4 = 0
    all4 = 0b1111
    seen_any = False
    for e in _iter_embeddings(pos_masks, seq_masks):
        seen_any = True
        pass4 = 0b1111
        for i, negative in enumerate(negatives):
            qmask = negative.itemset.mask
            if not qmask:
                continue
            pass4 &= _slot_pass4(qmask, negative.mode, seq_masks[e[i] : e[i + 1] - 1])
            if not pass4:
                break
        any4 |= pass4
        all4 &= pass4
        if any4 == 0b1111 and all4 == 0:
            break
    bits = 0
    for c in range(4):
        if seen_any and (all4 >> c) & 1:
            bits |= 1 << (2 * c)  # strong
        if (any4 >> c) & 1:
            bits |= 1 << (2 * c + 1)  # weak
    return bits


def weak_strong_support(
    p: NegPattern,
    db: SequenceDatabase,
    embedding: EmbeddingKind,
    nonincl: NonInclusion,
) -> tuple[int, int]:
    """(weak, strong) supports in one database pass, sharing embeddings."""
    pos_masks = [positive.mask for positive in p.positives]
    weak = 0
    strong = 0
    for s in db.sequences:
        seq_masks = [it.mask for it in s.itemsets]
        witness = False
        violator = False
        seen_any = False
        for e in _iter_embeddings(pos_masks, seq_masks):
            seen_any = True
            if _embedding_pass(p, seq_masks, e, embedding, nonincl):
                witness = True
            else:
                violator = True
            if witness and violator:
                break
        if witness:
            weak += 1
        if seen_any and not violator:
            strong += 1
    return weak, strong


def all_theta_supports(p: NegPattern, db: SequenceDatabase) -> tuple[int, ...]:
    """Supports under all eight relations, in canonical THETAS order."""
    counts = [0] * len(THETAS)
    for s in db.sequences:
        bits = theta_bits(p, s)
        for t in range(len(THETAS)):
            if (bits >> t) & 1:
                counts[t] += 1
    return tuple(counts)
