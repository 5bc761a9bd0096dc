"""Partial orders on patterns, dominance between containment relations, and
the empirical verification harnesses.

The dominance table is the hard-coded known result; the scans are
falsification harnesses over finite pattern/sequence spaces. A scan can
corroborate a dominance or anti-monotonicity claim on a space and can refute
one with a concrete, re-checkable counterexample, never prove it.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence as SequenceABC

from .model import (
    Dictionary,
    EmbeddingKind,
    Itemset,
    NegPattern,
    Negative,
    NegseqError,
    NonInclusion,
    Occurrence,
    Sequence,
    SequenceDatabase,
    Theta,
    THETAS,
    positive_part,
    singleton_negatives_only,
)
from .matching import (
    NotAPositiveEmbeddingError,
    all_theta_supports,
    check_embedding,
    is_contained,
    non_inclusion,
    positive_embeddings,
    theta_bits,
)
from .mining import PatternBounds, enumerate_patterns
from .textio import parse_pattern, parse_sequence


class EmptySpaceError(NegseqError):
    """A scan was given an empty pattern or sequence space."""


class OrderKind(Enum):
    """The three strict partial orders on negative patterns."""

    EMBED_INCL = "embed-incl"
    PREFIX_INCL = "prefix-incl"
    NEG_EXT = "neg-ext"


def _neg_fits(q: Itemset, q_other: Itemset, nonincl: NonInclusion) -> bool:
    # Under total non-inclusion a negative may grow (q subset of q'); under
    # partial non-inclusion the direction reverses.
    if nonincl is NonInclusion.TOTAL:
        return q.issubset(q_other)
    return q_other.issubset(q)


def _neg_itemsets(p: NegPattern) -> tuple[Itemset, ...]:
    # The orders compare constraint itemsets only; slot modes have no defined
    # order theory and are ignored.
    return tuple(negative.itemset for negative in p.negatives)


def embed_incl(
    p: NegPattern, p2: NegPattern, nonincl: NonInclusion = NonInclusion.TOTAL
) -> bool:
    """General strict inclusion: positives of ``p`` map to a subsequence of the
    positives of ``p2`` and each negative fits the union of the slots its gap
    spans; equal-size patterns must differ somewhere."""
    k, k2 = len(p.positives), len(p2.positives)
    if k > k2:
        return False
    if k == k2 and p.positives == p2.positives and _neg_itemsets(p) == _neg_itemsets(p2):
        return False

    def descend(i: int, prev: int) -> bool:
        if i == k:
            return True
        for u in range(prev + 1, k2 - (k - 1 - i)):
            if not p.positives[i].issubset(p2.positives[u]):
                continue
            if i > 0:
                union = Itemset(0)
                for j in range(prev, u):
                    union = union.union(p2.negatives[j].itemset)
                if not _neg_fits(p.negatives[i - 1].itemset, union, nonincl):
                    continue
            if descend(i + 1, u):
                return True
        return False

    return descend(0, -1)


def prefix_incl(
    p: NegPattern, p2: NegPattern, nonincl: NonInclusion = NonInclusion.TOTAL
) -> bool:
    """Positionwise inclusion; growth happens at the end (new positives) or
    inside itemsets. Equal-size patterns must differ in the last positive or
    in some negative."""
    k, k2 = len(p.positives), len(p2.positives)
    if k > k2:
        return False
    if not all(p.positives[i].issubset(p2.positives[i]) for i in range(k)):
        return False
    if not all(
        _neg_fits(p.negatives[i].itemset, p2.negatives[i].itemset, nonincl)
        for i in range(k - 1)
    ):
        return False
    if k == k2:
        return p.positives[-1] != p2.positives[-1] or any(
            p.negatives[i].itemset != p2.negatives[i].itemset for i in range(k - 1)
        )
    return True


def neg_ext(
    p: NegPattern, p2: NegPattern, nonincl: NonInclusion = NonInclusion.TOTAL
) -> bool:
    """Identical positives; some negative strictly grows (shrinks under the
    partial variant)."""
    if len(p.positives) != len(p2.positives) or p.positives != p2.positives:
        return False
    k = len(p.positives)
    if not all(
        _neg_fits(p.negatives[i].itemset, p2.negatives[i].itemset, nonincl)
        for i in range(k - 1)
    ):
        return False
    return any(
        p.negatives[i].itemset != p2.negatives[i].itemset for i in range(k - 1)
    )


_ORDER_FUNCS = {
    OrderKind.EMBED_INCL: embed_incl,
    OrderKind.PREFIX_INCL: prefix_incl,
    OrderKind.NEG_EXT: neg_ext,
}


def pattern_order(
    kind: OrderKind,
    p: NegPattern,
    p2: NegPattern,
    nonincl: NonInclusion = NonInclusion.TOTAL,
) -> bool:
    return _ORDER_FUNCS[kind](p, p2, nonincl)


class Dominance(Enum):
    SELF = "."
    DOMINATES = ">"
    NOT_DOMINATES = "-"


# Complete known dominance relation between the eight containment relations,
# closed under transitivity. Row dominates column; rows/columns follow the
# canonical THETAS order.
_KNOWN_ROWS = (
    ". > > > - - - -",
    "- . - > - - - -",
    "- - . > - - - -",
    "- - - . - - - -",
    "> > > > . > > >",
    "- > - > - . - >",
    "> > > > > > . >",
    "- > - > - > - .",
)


@dataclass(frozen=True)
class DominanceTable:
    entries: tuple[tuple[Dominance, ...], ...]

    def entry(self, left: Theta, right: Theta) -> Dominance:
        return self.entries[left.index][right.index]

    def dominates(self, left: Theta, right: Theta) -> bool:
        return self.entry(left, right) in (Dominance.DOMINATES, Dominance.SELF)


def known_dominance() -> DominanceTable:
    """The complete 8x8 dominance table, hard-coded."""
    return DominanceTable(
        tuple(
            tuple(Dominance(cell) for cell in row.split())
            for row in _KNOWN_ROWS
        )
    )


@dataclass(frozen=True)
class Counterexample:
    """A concrete refutation; ``pattern2`` is present for order-based scans."""

    pattern: NegPattern
    pattern2: NegPattern | None
    sequence: Sequence


@dataclass(frozen=True)
class Verdict:
    """Outcome of a scan. When ``holds`` is false the counterexample can be
    re-checked directly with the matcher."""

    holds: bool
    counterexample: Counterexample | None
    checked_pairs: int


def _as_spaces(
    patterns: Iterable[NegPattern], sequences: Iterable[Sequence]
) -> tuple[list[NegPattern], list[Sequence]]:
    pats = list(patterns)
    seqs = list(sequences)
    if not pats or not seqs:
        raise EmptySpaceError("pattern and sequence spaces must be non-empty")
    return pats, seqs


def dominance_scan(
    theta: Theta,
    theta2: Theta,
    patterns: Iterable[NegPattern],
    sequences: Iterable[Sequence],
) -> Verdict:
    """Search the product space for a pair contained under ``theta`` but not
    under ``theta2``. Deterministic: the first counterexample in pattern-major
    order is reported."""
    pats, seqs = _as_spaces(patterns, sequences)
    checked = 0
    for p in pats:
        for s in seqs:
            checked += 1
            if is_contained(p, s, theta) and not is_contained(p, s, theta2):
                return Verdict(False, Counterexample(p, None, s), checked)
    return Verdict(True, None, checked)


def equivalence_classes(
    thetas: SequenceABC[Theta],
    patterns: Iterable[NegPattern],
    sequences: Iterable[Sequence],
) -> tuple[tuple[Theta, ...], ...]:
    """Partition of ``thetas`` under mutual empirical dominance on the space.

    Classes are ordered by their first member in canonical order. The
    partition can only be as fine as the space allows: relations without a
    separating witness in the space land in the same class.
    """
    pats, seqs = _as_spaces(patterns, sequences)
    grid = ContainmentGrid(pats, seqs)
    return grid.equivalence_partition(thetas)


def anti_monotonicity_scan(
    theta: Theta,
    order: OrderKind,
    patterns: Iterable[NegPattern],
    sequences: Iterable[Sequence],
    order_nonincl: NonInclusion = NonInclusion.TOTAL,
) -> Verdict:
    """Search for a triple p < p', s with p' contained but p not contained.

    ``order_nonincl`` selects the total or reversed (partial) variant of the
    order; it is independent of ``theta``.
    """
    pats, seqs = _as_spaces(patterns, sequences)
    fn = _ORDER_FUNCS[order]
    checked = 0
    for p in pats:
        for p2 in pats:
            if not fn(p, p2, order_nonincl):
                continue
            for s in seqs:
                checked += 1
                if is_contained(p2, s, theta) and not is_contained(p, s, theta):
                    return Verdict(False, Counterexample(p, p2, s), checked)
    return Verdict(True, None, checked)


class ContainmentGrid:
    """Containment bits for every (pattern, sequence) pair of a space.

    A pair's behaviour under all eight relations is one byte, so scans reduce
    to a 256-entry histogram plus first-occurrence positions, which keeps the
    verification suites well inside their time budgets.
    """

    def __init__(self, patterns: Iterable[NegPattern], sequences: Iterable[Sequence]):
        self.patterns, self.sequences = _as_spaces(patterns, sequences)
        n_seq = len(self.sequences)
        counts = [0] * 256
        first = [-1] * 256
        contained: list[list[int]] = [[0] * 8 for _ in range(len(self.patterns))]
        flat = 0
        for i, p in enumerate(self.patterns):
            row = contained[i]
            for j in range(n_seq):
                bits = theta_bits(p, self.sequences[j])
                counts[bits] += 1
                if first[bits] < 0:
                    first[bits] = flat
                flat += 1
                for t in range(8):
                    if (bits >> t) & 1:
                        row[t] |= 1 << j
        self._counts = counts
        self._first = first
        self._contained = contained
        self._n_seq = n_seq

    @property
    def pairs(self) -> int:
        return len(self.patterns) * self._n_seq

    def contained_mask(self, pattern_index: int, theta: Theta) -> int:
        """Bitmask over sequence indexes contained under ``theta``."""
        return self._contained[pattern_index][theta.index]

    def dominance(self, theta: Theta, theta2: Theta) -> Verdict:
        t, t2 = theta.index, theta2.index
        best = -1
        for value in range(256):
            if self._counts[value] and (value >> t) & 1 and not (value >> t2) & 1:
                if best < 0 or self._first[value] < best:
                    best = self._first[value]
        if best < 0:
            return Verdict(True, None, self.pairs)
        i, j = divmod(best, self._n_seq)
        return Verdict(
            False,
            Counterexample(self.patterns[i], None, self.sequences[j]),
            best + 1,
        )

    def equivalence_partition(
        self, thetas: SequenceABC[Theta] = THETAS
    ) -> tuple[tuple[Theta, ...], ...]:
        order = sorted(thetas, key=lambda t: t.index)
        classes: list[list[Theta]] = []
        for theta in order:
            for cls in classes:
                rep = cls[0]
                if (
                    self.dominance(theta, rep).holds
                    and self.dominance(rep, theta).holds
                ):
                    cls.append(theta)
                    break
            else:
                classes.append([theta])
        return tuple(tuple(cls) for cls in classes)

    def comparable_pairs(
        self, order: OrderKind, order_nonincl: NonInclusion = NonInclusion.TOTAL
    ) -> list[tuple[int, int]]:
        fn = _ORDER_FUNCS[order]
        pats = self.patterns
        return [
            (i, i2)
            for i, p in enumerate(pats)
            for i2, p2 in enumerate(pats)
            if fn(p, p2, order_nonincl)
        ]

    def anti_monotonicity(
        self,
        theta: Theta,
        order: OrderKind,
        order_nonincl: NonInclusion = NonInclusion.TOTAL,
        pairs: list[tuple[int, int]] | None = None,
    ) -> Verdict:
        if pairs is None:
            pairs = self.comparable_pairs(order, order_nonincl)
        checked = 0
        for i, i2 in pairs:
            upper = self._contained[i2][theta.index]
            lower = self._contained[i][theta.index]
            bad = upper & ~lower
            if bad:
                j = (bad & -bad).bit_length() - 1
                return Verdict(
                    False,
                    Counterexample(self.patterns[i], self.patterns[i2], self.sequences[j]),
                    checked + j + 1,
                )
            checked += self._n_seq
        return Verdict(True, None, checked)


# ---------------------------------------------------------------------------
# Default verification spaces
# ---------------------------------------------------------------------------

# Patterns and sequences that witness every known non-dominance and every
# anti-monotonicity failure; they are listed first so scans rediscover them
# deterministically.
_WITNESS_PATTERNS = (
    "<b !c a>",
    "<b !c d a>",
    "<a !b c>",
    "<a !b c d>",
    "<a !b (c d)>",
    "<a !(b c) d>",
    "<a !(b d) c>",
)

_WITNESS_SEQUENCES = (
    "b e d c a",
    "a c d a b c",
    "a (c d) a b c",
    "a b d",
    "a c b c",
    "a b c d",
    "a b d c d",
)


@dataclass(frozen=True)
class SpaceBounds:
    """Caps for the enumerated filler of a verification space."""

    alphabet: int = 3
    max_positives: int = 2
    max_itemset_size: int = 2
    max_neg_size: int = 2
    max_sequence_len: int = 3
    max_sequence_itemset: int = 2

    def __post_init__(self):
        if not 1 <= self.alphabet <= 6:
            raise ValueError("fill alphabet must use between 1 and 6 items")


@dataclass(frozen=True)
class VerificationSpace:
    patterns: tuple[NegPattern, ...]
    sequences: tuple[Sequence, ...]
    dictionary: Dictionary


def enumerate_sequences(
    alphabet: tuple[int, ...], max_len: int, max_itemset_size: int
) -> Iterator[Sequence]:
    """Every sequence up to ``max_len`` itemsets of bounded size, exactly once,
    in depth-first prefix order."""
    itemsets: list[Itemset] = []

    def grow(mask: int, floor: int, size: int) -> None:
        for item in alphabet:
            if item > floor:
                new = mask | (1 << item)
                itemsets.append(Itemset(new))
                if size + 1 < max_itemset_size:
                    grow(new, item, size + 1)

    grow(0, -1, 0)
    itemsets.sort(key=lambda it: (len(it), it.items))

    def build(prefix: tuple[Itemset, ...]) -> Iterator[Sequence]:
        for itemset in itemsets:
            seq = prefix + (itemset,)
            yield Sequence(seq)
            if len(seq) < max_len:
                yield from build(seq)

    yield from build(())


def default_space(
    bounds: SpaceBounds = SpaceBounds(), *, singleton_negatives: bool = False
) -> VerificationSpace:
    """The default finite space: the known witnesses first, then a systematic
    filler within ``bounds``. With ``singleton_negatives`` every pattern whose
    negatives exceed one item is dropped (the witnesses included)."""
    dictionary = Dictionary("abcdef")
    alphabet = tuple(range(bounds.alphabet))

    patterns: list[NegPattern] = []
    seen_p: set[NegPattern] = set()

    def add_pattern(p: NegPattern) -> None:
        if singleton_negatives and not singleton_negatives_only(p):
            return
        if p not in seen_p:
            seen_p.add(p)
            patterns.append(p)

    for text in _WITNESS_PATTERNS:
        add_pattern(parse_pattern(text, dictionary))
    fill = PatternBounds(
        bounds.max_positives, bounds.max_itemset_size, bounds.max_neg_size, alphabet
    )
    for p in enumerate_patterns(fill):
        add_pattern(p)
    # Longer patterns with singleton itemsets, for order coverage at 3 steps.
    deep = PatternBounds(3, 1, 1, tuple(range(min(2, bounds.alphabet))))
    for p in enumerate_patterns(deep):
        add_pattern(p)

    sequences: list[Sequence] = []
    seen_s: set[Sequence] = set()

    def add_sequence(s: Sequence) -> None:
        if s not in seen_s:
            seen_s.add(s)
            sequences.append(s)

    for text in _WITNESS_SEQUENCES:
        add_sequence(parse_sequence(text, dictionary))
    for s in enumerate_sequences(
        alphabet, bounds.max_sequence_len, bounds.max_sequence_itemset
    ):
        add_sequence(s)
    for s in enumerate_sequences(tuple(range(min(2, bounds.alphabet))), 5, 1):
        add_sequence(s)

    return VerificationSpace(tuple(patterns), tuple(sequences), dictionary)


# ---------------------------------------------------------------------------
# Verification suites
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class DominanceCheck:
    left: Theta
    right: Theta
    expected: Dominance
    verdict: Verdict

    @property
    def ok(self) -> bool:
        if self.expected is Dominance.DOMINATES:
            return self.verdict.holds
        return not self.verdict.holds


@dataclass(frozen=True)
class DominanceReport:
    checks: tuple[DominanceCheck, ...]
    pattern_count: int
    sequence_count: int

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)


def verify_dominance(space: VerificationSpace | None = None) -> DominanceReport:
    """Scan every off-diagonal entry of the known table over the space."""
    if space is None:
        space = default_space()
    grid = ContainmentGrid(space.patterns, space.sequences)
    table = known_dominance()
    checks = []
    for left in THETAS:
        for right in THETAS:
            if left == right:
                continue
            checks.append(
                DominanceCheck(
                    left, right, table.entry(left, right), grid.dominance(left, right)
                )
            )
    return DominanceReport(tuple(checks), len(space.patterns), len(space.sequences))


@dataclass(frozen=True)
class EquivalenceReport:
    general: tuple[tuple[Theta, ...], ...]
    singleton: tuple[tuple[Theta, ...], ...]
    expected_general: int = 6
    expected_singleton: int = 4

    @property
    def ok_general(self) -> bool:
        return len(self.general) == self.expected_general

    @property
    def ok_singleton(self) -> bool:
        return len(self.singleton) == self.expected_singleton

    @property
    def ok(self) -> bool:
        return self.ok_general and self.ok_singleton


def verify_equivalence(bounds: SpaceBounds = SpaceBounds()) -> EquivalenceReport:
    """Empirical equivalence classes on the general and singleton spaces.

    On the singleton space the honest partition has two classes, not the four
    the known results predict: with one-item negatives, partial and total
    non-inclusion are the same test, so only the occurrence axis separates
    anything. The report keeps the expected count at four and flags the
    mismatch rather than papering over it.
    """
    general_space = default_space(bounds)
    singleton_space = default_space(bounds, singleton_negatives=True)
    general = equivalence_classes(THETAS, general_space.patterns, general_space.sequences)
    singleton = equivalence_classes(
        THETAS, singleton_space.patterns, singleton_space.sequences
    )
    return EquivalenceReport(general, singleton)


@dataclass(frozen=True)
class AntiMonotonicityCheck:
    order: OrderKind
    theta: Theta
    expected_holds: bool
    verdict: Verdict

    @property
    def ok(self) -> bool:
        return self.verdict.holds == self.expected_holds


@dataclass(frozen=True)
class AntiMonotonicityReport:
    checks: tuple[AntiMonotonicityCheck, ...]

    @property
    def ok(self) -> bool:
        return all(check.ok for check in self.checks)


def _expected_anti_monotone(order: OrderKind, theta: Theta) -> bool:
    # Known results, for orders taken with total non-inclusion: nothing is
    # anti-monotonic under general inclusion; prefix inclusion preserves
    # weak-total containment; negative extension preserves all total
    # relations. Partial relations fail everywhere on these spaces.
    if theta.non_inclusion is NonInclusion.PARTIAL:
        return False
    if order is OrderKind.EMBED_INCL:
        return False
    if order is OrderKind.PREFIX_INCL:
        return theta.occurrence is Occurrence.WEAK
    return True


def verify_anti_monotonicity(
    space: VerificationSpace | None = None,
) -> AntiMonotonicityReport:
    """Scan all (order, theta) combinations against the known outcomes."""
    if space is None:
        space = default_space()
    grid = ContainmentGrid(space.patterns, space.sequences)
    checks = []
    for order in OrderKind:
        pairs = grid.comparable_pairs(order)
        for theta in THETAS:
            verdict = grid.anti_monotonicity(theta, order, pairs=pairs)
            checks.append(
                AntiMonotonicityCheck(
                    order, theta, _expected_anti_monotone(order, theta), verdict
                )
            )
    return AntiMonotonicityReport(tuple(checks))


# ---------------------------------------------------------------------------
# Randomized invariant harness
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class InvariantCheck:
    name: str
    draws: int
    failures: int
    example: str = ""

    @property
    def ok(self) -> bool:
        return self.failures == 0


def random_pattern(
    rng: random.Random,
    alphabet: int = 5,
    max_positives: int = 3,
    max_itemset_size: int = 2,
    max_neg_size: int = 2,
    singleton_negatives: bool = False,
) -> NegPattern:
    k = rng.randint(1, max_positives)
    positives = tuple(
        Itemset.of(
            rng.sample(range(alphabet), rng.randint(1, max_itemset_size))
        )
        for _ in range(k)
    )
    cap = 1 if singleton_negatives else max_neg_size
    negatives = tuple(
        Negative(Itemset.of(rng.sample(range(alphabet), rng.randint(0, cap))))
        for _ in range(k - 1)
    )
    return NegPattern(positives, negatives)


def random_sequence(
    rng: random.Random,
    alphabet: int = 5,
    max_len: int = 6,
    max_itemset_size: int = 3,
) -> Sequence:
    return Sequence(
        tuple(
            Itemset.of(rng.sample(range(alphabet), rng.randint(1, max_itemset_size)))
            for _ in range(rng.randint(0, max_len))
        )
    )


def verify_invariants(draws: int = 10000, seed: int = 94001) -> tuple[InvariantCheck, ...]:
    """Randomized checks of the layered implications between the relations.

    Covers: total non-inclusion implies partial; a strict embedding is a soft
    embedding; under total non-inclusion soft and strict embeddings coincide,
    likewise when every negative is a singleton; tuples accepted by the
    embedding check embed the positive part; strong containment implies weak;
    total containment implies partial; and the support inequality chain
    across the eight relations, with equality of soft and strict supports
    under total non-inclusion.
    """
    rng = random.Random(seed)
    table = known_dominance()
    names = (
        "non-inclusion: total implies partial",
        "strict embedding implies soft embedding",
        "total non-inclusion: soft and strict embeddings coincide",
        "singleton negatives: soft and strict embeddings coincide",
        "accepted tuples embed the positive part",
        "strong containment implies weak containment",
        "total containment implies partial containment",
        "containment respects the dominance table",
        "support chain across the eight relations",
    )
    failures = {name: 0 for name in names}
    examples = {name: "" for name in names}
    recent: list[Sequence] = []
    # For each relation, the relations it is known to dominate, as a bitmask.
    implied = [0] * 8
    for left in THETAS:
        for right in THETAS:
            if table.entry(left, right) is Dominance.DOMINATES:
                implied[left.index] |= 1 << right.index
    weak_of_strong = {
        Theta(Occurrence.STRONG, emb, incl).index: Theta(
            Occurrence.WEAK, emb, incl
        ).index
        for emb, incl in (
            (e, i)
            for e in (EmbeddingKind.SOFT, EmbeddingKind.STRICT)
            for i in (NonInclusion.PARTIAL, NonInclusion.TOTAL)
        )
    }
    partial_of_total = {
        Theta(occ, emb, NonInclusion.TOTAL).index: Theta(
            occ, emb, NonInclusion.PARTIAL
        ).index
        for occ in Occurrence
        for emb in EmbeddingKind
    }
    dictionary = Dictionary(chr(ord("a") + i) for i in range(5))

    def record(name: str, detail: str) -> None:
        failures[name] += 1
        if not examples[name]:
            examples[name] = detail

    for draw in range(draws):
        singleton = draw % 2 == 1
        p = random_pattern(rng, singleton_negatives=singleton)
        s = random_sequence(rng)
        recent.append(s)

        pp = Itemset.of(rng.sample(range(5), rng.randint(0, 3)))
        ii = Itemset.of(rng.sample(range(5), rng.randint(0, 3)))
        if non_inclusion(pp, ii, NonInclusion.TOTAL) and not non_inclusion(
            pp, ii, NonInclusion.PARTIAL
        ):
            record(names[0], f"P={pp.items} I={ii.items}")

        embeddings = positive_embeddings(positive_part(p), s)
        for e in embeddings[:8]:
            for incl in (NonInclusion.PARTIAL, NonInclusion.TOTAL):
                strict = check_embedding(e, p, s, EmbeddingKind.STRICT, incl)
                soft = check_embedding(e, p, s, EmbeddingKind.SOFT, incl)
                if strict and not soft:
                    record(names[1], f"e={e}")
                if incl is NonInclusion.TOTAL and strict != soft:
                    record(names[2], f"e={e}")
                if singleton and strict != soft:
                    record(names[3], f"e={e}")

        if len(s) >= len(p.positives) >= 1:
            guess = tuple(
                sorted(rng.sample(range(1, len(s) + 1), len(p.positives)))
            )
            try:
                check_embedding(
                    guess, p, s, EmbeddingKind.SOFT, NonInclusion.PARTIAL
                )
                accepted = True
            except NotAPositiveEmbeddingError:
                accepted = False
            if accepted != (guess in embeddings):
                record(names[4], f"e={guess}")

        bits = theta_bits(p, s)
        for strong_index, weak_index in weak_of_strong.items():
            if (bits >> strong_index) & 1 and not (bits >> weak_index) & 1:
                record(names[5], THETAS[strong_index].spell())
        for total_index, partial_index in partial_of_total.items():
            if (bits >> total_index) & 1 and not (bits >> partial_index) & 1:
                record(names[6], THETAS[total_index].spell())
        for t in range(8):
            if (bits >> t) & 1 and bits & implied[t] != implied[t]:
                record(names[7], THETAS[t].spell())

        if len(recent) >= 4:
            db = SequenceDatabase(tuple(recent), dictionary)
            recent.clear()
            supports = all_theta_supports(p, db)
            for left in THETAS:
                for right in THETAS:
                    if table.entry(left, right) is Dominance.DOMINATES:
                        if supports[left.index] > supports[right.index]:
                            record(
                                names[8],
                                f"{left.spell()}={supports[left.index]} "
                                f"{right.spell()}={supports[right.index]}",
                            )
            for occ in Occurrence:
                soft_total = Theta(occ, EmbeddingKind.SOFT, NonInclusion.TOTAL)
                strict_total = Theta(occ, EmbeddingKind.STRICT, NonInclusion.TOTAL)
                if supports[soft_total.index] != supports[strict_total.index]:
                    record(names[8], f"{occ.value} soft/strict total differ")

    return tuple(
        InvariantCheck(name, draws, failures[name], examples[name]) for name in names
    )
