"""Canonical pattern enumeration and frequent-pattern mining.

The pruned miner must return exactly the bruteforce result. It walks prefix
extensions (append a positive itemset, grow the last positive itemset, grow a
negative itemset) and cuts a subtree once the weak support of its root fails
the threshold; under strong occurrence the weak support acts as an upper
bound and negative-growth edges are additionally cut on exact strong support.
Neither cut can lose a frequent pattern: weak support never increases along a
prefix extension, and strong support never increases along negative growth.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator

from .model import (
    Dictionary,
    Itemset,
    NegPattern,
    Negative,
    NegseqError,
    NonInclusion,
    Occurrence,
    SequenceDatabase,
    Theta,
)
from .matching import support, weak_strong_support


class UnsupportedThetaError(NegseqError):
    """The pruned miner only covers total non-inclusion relations."""


@dataclass(frozen=True, slots=True)
class PatternBounds:
    """Finite pattern space: alphabet plus size caps, all at least 1."""

    max_positives: int
    max_itemset_size: int
    max_neg_size: int
    alphabet: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "alphabet", tuple(sorted(set(self.alphabet))))
        if self.max_positives < 1 or self.max_itemset_size < 1 or self.max_neg_size < 1:
            raise ValueError("pattern bounds must be at least 1")
        if not self.alphabet:
            raise ValueError("alphabet must be non-empty")
        if any(item < 0 for item in self.alphabet):
            raise ValueError("item ids are non-negative")

    @classmethod
    def for_dictionary(
        cls,
        dictionary: Dictionary,
        max_positives: int = 3,
        max_itemset_size: int = 2,
        max_neg_size: int = 2,
    ) -> "PatternBounds":
        return cls(max_positives, max_itemset_size, max_neg_size, tuple(range(len(dictionary))))


def _grow_last_positive(pattern: NegPattern, item: int) -> NegPattern:
    positives = pattern.positives[:-1] + (
        Itemset(pattern.positives[-1].mask | (1 << item)),
    )
    return NegPattern(positives, pattern.negatives)


def _append_positive(pattern: NegPattern, item: int) -> NegPattern:
    return NegPattern(
        pattern.positives + (Itemset(1 << item),),
        pattern.negatives + (Negative(),),
    )


def _grow_negative(pattern: NegPattern, slot: int, item: int) -> NegPattern:
    negatives = list(pattern.negatives)
    negatives[slot] = Negative(Itemset(negatives[slot].itemset.mask | (1 << item)))
    return NegPattern(pattern.positives, tuple(negatives))


def _negative_extensions(
    pattern: NegPattern, bounds: PatternBounds, last_slot: int, last_item: int
) -> Iterator[tuple[NegPattern, int, int]]:
    """Negative growths continuing the canonical (slot, item) order."""
    slots = len(pattern.positives) - 1
    start = last_slot if last_slot >= 0 else 0
    for slot in range(start, slots):
        if slot == last_slot:
            if len(pattern.negatives[slot].itemset) >= bounds.max_neg_size:
                continue
            floor = last_item
        else:
            floor = -1
        for item in bounds.alphabet:
            if item > floor:
                yield _grow_negative(pattern, slot, item), slot, item


def _positive_extensions(
    pattern: NegPattern, bounds: PatternBounds
) -> Iterator[NegPattern]:
    last = pattern.positives[-1]
    if len(last) < bounds.max_itemset_size:
        top = max(last)
        for item in bounds.alphabet:
            if item > top:
                yield _grow_last_positive(pattern, item)
    if len(pattern.positives) < bounds.max_positives:
        for item in bounds.alphabet:
            yield _append_positive(pattern, item)


def enumerate_patterns(bounds: PatternBounds) -> Iterator[NegPattern]:
    """Every valid pattern within ``bounds``, exactly once, in a fixed order.

    A pattern's canonical construction adds items left to right: the positive
    itemsets first (each in increasing item order), then negative items in
    (slot, item) order. Children of a state continue that construction, so the
    depth-first walk is duplicate-free without a seen-set.
    """

    def walk_positive(pattern: NegPattern) -> Iterator[NegPattern]:
        yield pattern
        for child in _positive_extensions(pattern, bounds):
            yield from walk_positive(child)
        yield from walk_negative(pattern, -1, -1)

    def walk_negative(
        pattern: NegPattern, last_slot: int, last_item: int
    ) -> Iterator[NegPattern]:
        for child, slot, item in _negative_extensions(
            pattern, bounds, last_slot, last_item
        ):
            yield child
            yield from walk_negative(child, slot, item)

    for item in bounds.alphabet:
        yield from walk_positive(NegPattern((Itemset(1 << item),)))


@dataclass(frozen=True, slots=True)
class MiningStats:
    """candidates: patterns whose support was evaluated; support_calls:
    database passes; pruned_subtrees: nodes whose extensions were cut."""

    candidates: int = 0
    support_calls: int = 0
    pruned_subtrees: int = 0


@dataclass(frozen=True, slots=True)
class MiningResult:
    frequent: tuple[tuple[NegPattern, int], ...]
    theta: Theta
    minsup: int
    stats: MiningStats


def mine_bruteforce(
    db: SequenceDatabase, theta: Theta, minsup: int, bounds: PatternBounds
) -> MiningResult:
    """Exact frequent set by exhaustive enumeration; the oracle engine."""
    if minsup < 1:
        raise ValueError("minsup must be at least 1")
    frequent: list[tuple[NegPattern, int]] = []
    candidates = 0
    for pattern in enumerate_patterns(bounds):
        candidates += 1
        count = support(pattern, db, theta)
        if count >= minsup:
            frequent.append((pattern, count))
    return MiningResult(
        tuple(frequent), theta, minsup, MiningStats(candidates, candidates, 0)
    )


def _has_positive_extension(pattern: NegPattern, bounds: PatternBounds) -> bool:
    if len(pattern.positives) < bounds.max_positives:
        return True
    last = pattern.positives[-1]
    return len(last) < bounds.max_itemset_size and bounds.alphabet[-1] > max(last)


def _has_negative_extension(
    pattern: NegPattern, bounds: PatternBounds, last_slot: int, last_item: int
) -> bool:
    for _ in _negative_extensions(pattern, bounds, last_slot, last_item):
        return True
    return False


def mine_pruned(
    db: SequenceDatabase, theta: Theta, minsup: int, bounds: PatternBounds
) -> MiningResult:
    """Frequent patterns under a total non-inclusion relation, with pruning.

    Returns exactly what :func:`mine_bruteforce` returns on the same inputs.
    Partial non-inclusion admits no such pruning (growing a negative weakens a
    partial constraint), so it is rejected; use the bruteforce engine there.
    """
    if theta.non_inclusion is not NonInclusion.TOTAL:
        raise UnsupportedThetaError(
            "pruned mining requires total non-inclusion; "
            "use mine_bruteforce for partial relations"
        )
    if minsup < 1:
        raise ValueError("minsup must be at least 1")
    strong = theta.occurrence is Occurrence.STRONG
    frequent: list[tuple[NegPattern, int]] = []
    candidates = 0
    pruned = 0

    def evaluate(pattern: NegPattern) -> tuple[int, int]:
        nonlocal candidates
        candidates += 1
        if strong:
            return weak_strong_support(pattern, db, theta.embedding, theta.non_inclusion)
        weak = support(pattern, db, theta)
        return weak, weak

    def visit_negative(pattern: NegPattern, last_slot: int, last_item: int) -> None:
        nonlocal pruned
        weak, exact = evaluate(pattern)
        threshold = exact if strong else weak
        if weak < minsup or (strong and exact < minsup):
            # Everything below grows this pattern's negatives, so its support
            # cannot recover under either occurrence.
            if _has_negative_extension(pattern, bounds, last_slot, last_item):
                pruned += 1
            return
        frequent.append((pattern, threshold))
        for child, slot, item in _negative_extensions(
            pattern, bounds, last_slot, last_item
        ):
            visit_negative(child, slot, item)

    def visit_positive(pattern: NegPattern) -> None:
        nonlocal pruned
        weak, exact = evaluate(pattern)
        if weak < minsup:
            if _has_positive_extension(pattern, bounds) or _has_negative_extension(
                pattern, bounds, -1, -1
            ):
                pruned += 1
            return
        if strong:
            if exact >= minsup:
                frequent.append((pattern, exact))
        else:
            frequent.append((pattern, weak))
        for child in _positive_extensions(pattern, bounds):
            visit_positive(child)
        if strong and exact < minsup:
            # Negative growth only shrinks strong support; positive growth may
            # still recover, so only the negative edges are cut here.
            if _has_negative_extension(pattern, bounds, -1, -1):
                pruned += 1
            return
        for child, slot, item in _negative_extensions(pattern, bounds, -1, -1):
            visit_negative(child, slot, item)

    for item in bounds.alphabet:
        visit_positive(NegPattern((Itemset(1 << item),)))
    return MiningResult(
        tuple(frequent), theta, minsup, MiningStats(candidates, candidates, pruned)
    )
