import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from negseq import (
    Dictionary,
    EMPTY_ITEMSET,
    EmbeddingKind,
    Itemset,
    NegMode,
    NonInclusion,
    NotAPositiveEmbeddingError,
    Occurrence,
    Sequence,
    SequenceDatabase,
    THETAS,
    Theta,
    all_theta_supports,
    check_embedding,
    contains,
    gap_union,
    is_contained,
    non_inclusion,
    positive_embeddings,
    positive_part,
    support,
    theta_bits,
)
from negseq.matching import weak_strong_support
from negseq.orders import random_pattern, random_sequence
from negseq.textio import parse_pattern, parse_sequence

SOFT, STRICT = EmbeddingKind.SOFT, EmbeddingKind.STRICT
PARTIAL, TOTAL = NonInclusion.PARTIAL, NonInclusion.TOTAL


# --- independent oracle: quantifier expansion over literal definitions -----


def naive_embeddings(positives, s):
    out = []
    for combo in itertools.combinations(range(1, len(s.itemsets) + 1), len(positives)):
        if all(
            set(p.items) <= set(s.itemsets[pos - 1].items)
            for p, pos in zip(positives, combo)
        ):
            out.append(combo)
    return out


def naive_non_inclusion(p, i, kind):
    p_items, i_items = set(p.items), set(i.items)
    if not p_items:
        return True
    if kind is PARTIAL:
        return any(e not in i_items for e in p_items)
    return all(e not in i_items for e in p_items)


def naive_check(e, p, s, emb, incl):
    for i, negative in enumerate(p.negatives):
        if not negative.itemset:
            continue
        mode = negative.mode
        if mode is NegMode.SOFT_PARTIAL:
            emb_i, incl_i = SOFT, PARTIAL
        elif mode is NegMode.STRICT_PARTIAL:
            emb_i, incl_i = STRICT, PARTIAL
        elif mode is NegMode.TOTAL:
            emb_i, incl_i = STRICT, TOTAL
        else:
            emb_i, incl_i = emb, incl
        gaps = [s.itemsets[j - 1] for j in range(e[i] + 1, e[i + 1])]
        if emb_i is SOFT:
            ok = all(naive_non_inclusion(negative.itemset, g, incl_i) for g in gaps)
        else:
            union = set()
            for g in gaps:
                union |= set(g.items)
            ok = naive_non_inclusion(negative.itemset, Itemset.of(union), incl_i)
        if not ok:
            return False
    return True


def naive_contains(p, s, theta):
    embeddings = naive_embeddings(p.positives, s)
    good = [e for e in embeddings if naive_check(e, p, s, theta.embedding, theta.non_inclusion)]
    if theta.occurrence is Occurrence.WEAK:
        return bool(good)
    return bool(embeddings) and len(good) == len(embeddings)


# --- non-inclusion ----------------------------------------------------------


class TestNonInclusion:
    def test_partial_versus_total(self, abc_dict):
        cd = parse_pattern("<(c d)>", abc_dict).positives[0]
        cf = parse_pattern("<(c f)>", abc_dict).positives[0]
        assert non_inclusion(cd, cf, PARTIAL)
        assert not non_inclusion(cd, cf, TOTAL)

    def test_empty_convention(self):
        ab = Itemset.of([0, 1])
        assert non_inclusion(EMPTY_ITEMSET, ab, PARTIAL)
        assert non_inclusion(EMPTY_ITEMSET, ab, TOTAL)

    def test_singleton_contained(self):
        a = Itemset.of([0])
        assert not non_inclusion(a, a, PARTIAL)
        assert not non_inclusion(a, a, TOTAL)

    @given(st.sets(st.integers(0, 5)), st.sets(st.integers(0, 5)))
    def test_total_implies_partial(self, p_items, i_items):
        p, i = Itemset.of(p_items), Itemset.of(i_items)
        if non_inclusion(p, i, TOTAL):
            assert non_inclusion(p, i, PARTIAL)


# --- positive embeddings ----------------------------------------------------


class TestPositiveEmbeddings:
    def test_four_occurrences(self, abc_dict):
        s = parse_sequence("a b c a d e b d", abc_dict)
        p = parse_pattern("<a b d>", abc_dict)
        assert positive_embeddings(p, s) == [(1, 2, 5), (1, 2, 8), (1, 7, 8), (4, 7, 8)]

    def test_empty_sequence(self, abc_dict):
        assert positive_embeddings(parse_pattern("<a>", abc_dict), Sequence(())) == []

    def test_multi_item_step(self, abc_dict):
        s = parse_sequence("(b c) f a", abc_dict)
        p = parse_pattern("<b a>", abc_dict)
        assert positive_embeddings(p, s) == naive_embeddings(p.positives, s) == [(1, 3)]

    def test_rejects_negatives(self, abc_dict):
        p = parse_pattern("<a !b c>", abc_dict)
        with pytest.raises(ValueError):
            positive_embeddings(p, parse_sequence("a c", abc_dict))

    @settings(max_examples=200)
    @given(st.data())
    def test_matches_combination_oracle(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        p = positive_part(random_pattern(rng))
        s = random_sequence(rng)
        assert positive_embeddings(p, s) == naive_embeddings(p.positives, s)


# --- gap union --------------------------------------------------------------


class TestGapUnion:
    def test_hand_derived(self, abc_dict):
        s = parse_sequence("a c b e d", abc_dict)
        assert gap_union(s, (1, 5), 1).tokens(abc_dict) == ("b", "c", "e")

    def test_adjacent_positions(self, abc_dict):
        s = parse_sequence("a b", abc_dict)
        assert gap_union(s, (1, 2), 1) == EMPTY_ITEMSET

    def test_table_sequence(self, abc_dict):
        s = parse_sequence("(b c) (c d e f) a", abc_dict)
        assert gap_union(s, (1, 3), 1).tokens(abc_dict) == ("c", "d", "e", "f")

    def test_slot_out_of_range(self, abc_dict):
        s = parse_sequence("a b c", abc_dict)
        with pytest.raises(ValueError):
            gap_union(s, (1, 3), 2)
        with pytest.raises(ValueError):
            gap_union(s, (1, 3), 0)
        with pytest.raises(ValueError):
            gap_union(s, (3, 1), 1)


# --- check_embedding --------------------------------------------------------


class TestCheckEmbedding:
    @pytest.fixture
    def pattern(self, abc_dict):
        return parse_pattern("<a !(b c) d>", abc_dict)

    def test_soft_sees_itemsets_individually(self, pattern, abc_dict):
        s = parse_sequence("a c b e d", abc_dict)
        assert check_embedding((1, 5), pattern, s, SOFT, PARTIAL)
        assert not check_embedding((1, 5), pattern, s, STRICT, PARTIAL)

    def test_clean_gap_passes_everything(self, pattern, abc_dict):
        s = parse_sequence("a e d", abc_dict)
        for emb in (SOFT, STRICT):
            for incl in (PARTIAL, TOTAL):
                assert check_embedding((1, 3), pattern, s, emb, incl)

    def test_single_item_gap(self, pattern, abc_dict):
        s = parse_sequence("a b e d", abc_dict)
        assert check_embedding((1, 4), pattern, s, STRICT, PARTIAL)
        assert not check_embedding((1, 4), pattern, s, SOFT, TOTAL)

    def test_not_an_embedding(self, pattern, abc_dict):
        s = parse_sequence("a c b e d", abc_dict)
        with pytest.raises(NotAPositiveEmbeddingError):
            check_embedding((1,), pattern, s, SOFT, PARTIAL)
        with pytest.raises(NotAPositiveEmbeddingError):
            check_embedding((5, 1), pattern, s, SOFT, PARTIAL)
        with pytest.raises(NotAPositiveEmbeddingError):
            check_embedding((1, 4), pattern, s, SOFT, PARTIAL)  # position 4 is e
        with pytest.raises(NotAPositiveEmbeddingError):
            check_embedding((1, 9), pattern, s, SOFT, PARTIAL)

    def test_slot_mode_pins_evaluation(self, abc_dict):
        s = parse_sequence("a b e d", abc_dict)
        pinned = parse_pattern("<a !|b c| d>", abc_dict)
        # Total mode fails here no matter how weak the requested pair is.
        assert not check_embedding((1, 4), pinned, s, SOFT, PARTIAL)
        free = parse_pattern("<a !(b c) d>", abc_dict)
        assert check_embedding((1, 4), free, s, SOFT, PARTIAL)


# --- lemma-style properties over random draws -------------------------------


@settings(max_examples=150)
@given(st.data())
def test_embedding_level_implications(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    p = random_pattern(rng)
    s = random_sequence(rng)
    for e in positive_embeddings(positive_part(p), s)[:6]:
        for incl in (PARTIAL, TOTAL):
            strict = check_embedding(e, p, s, STRICT, incl)
            soft = check_embedding(e, p, s, SOFT, incl)
            assert not strict or soft  # strict embedding is a soft embedding
            if incl is TOTAL:
                assert strict == soft


@settings(max_examples=150)
@given(st.data())
def test_singleton_negatives_collapse_soft_strict(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    p = random_pattern(rng, singleton_negatives=True)
    s = random_sequence(rng)
    for e in positive_embeddings(positive_part(p), s)[:6]:
        for incl in (PARTIAL, TOTAL):
            assert check_embedding(e, p, s, STRICT, incl) == check_embedding(
                e, p, s, SOFT, incl
            )


@settings(max_examples=200)
@given(st.data())
def test_contains_agrees_with_quantifier_expansion(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    p = random_pattern(rng)
    s = random_sequence(rng)
    bits = theta_bits(p, s)
    for theta in THETAS:
        expected = naive_contains(p, s, theta)
        assert contains(p, s, theta).contained == expected
        assert is_contained(p, s, theta) == expected
        assert bool((bits >> theta.index) & 1) == expected


@settings(max_examples=100)
@given(st.data())
def test_match_report_invariants(data):
    rng = random.Random(data.draw(st.integers(0, 10**6)))
    p = random_pattern(rng)
    s = random_sequence(rng)
    for theta in THETAS:
        report = contains(p, s, theta)
        if theta.occurrence is Occurrence.WEAK and report.contained:
            assert report.witness is not None
        if (
            theta.occurrence is Occurrence.STRONG
            and not report.contained
            and report.total_positive_embeddings > 0
        ):
            assert report.violator is not None
        if report.witness is not None:
            assert check_embedding(report.witness, p, s, theta.embedding, theta.non_inclusion)
        if report.violator is not None:
            assert not check_embedding(
                report.violator, p, s, theta.embedding, theta.non_inclusion
            )


# --- contains on the worked examples ----------------------------------------


class TestContains:
    def test_strong_versus_weak(self, abc_dict):
        p = parse_pattern("<a b !c d>", abc_dict)
        s = parse_sequence("a b c a d e b d", abc_dict)
        for emb in (SOFT, STRICT):
            for incl in (PARTIAL, TOTAL):
                weak = contains(p, s, Theta(Occurrence.WEAK, emb, incl))
                strong = contains(p, s, Theta(Occurrence.STRONG, emb, incl))
                assert weak.contained and weak.witness == (1, 7, 8)
                assert not strong.contained and strong.violator == (1, 2, 5)
                assert weak.total_positive_embeddings == 4

    def test_blocked_sequence_fails_all_eight(self, abc_dict):
        p = parse_pattern("<a !(b c) d>", abc_dict)
        s = parse_sequence("a (b c) e d", abc_dict)
        assert theta_bits(p, s) == 0

    def test_theta_collapses_without_negatives(self, abc_dict):
        p = parse_pattern("<a b>", abc_dict)
        s = parse_sequence("c a e b", abc_dict)
        assert theta_bits(p, s) == 0b11111111

    def test_absent_positive_part(self, abc_dict):
        p = parse_pattern("<a !b c>", abc_dict)
        s = parse_sequence("c b a", abc_dict)
        for theta in THETAS:
            report = contains(p, s, theta)
            assert not report.contained
            assert report.total_positive_embeddings == 0
            assert report.witness is None and report.violator is None

    def test_embedding_cap_saturates_count(self, abc_dict):
        p = parse_pattern("<a b !c d>", abc_dict)
        s = parse_sequence("a b c a d e b d", abc_dict)
        report = contains(p, s, THETAS[1], embedding_cap=2)
        assert report.total_positive_embeddings == 2


# --- support ----------------------------------------------------------------


class TestSupport:
    def test_total_non_inclusion_on_comparison_db(self, table1_db):
        p = parse_pattern("<b !(c d) a>", table1_db.dictionary)
        for occ in Occurrence:
            for emb in EmbeddingKind:
                assert support(p, table1_db, Theta(occ, emb, TOTAL)) == 2

    def test_partial_non_inclusion_large_negative(self, table1_db):
        p = parse_pattern("<b !(c d e g) a>", table1_db.dictionary)
        assert support(p, table1_db, Theta(Occurrence.WEAK, SOFT, PARTIAL)) == 5

    def test_rule_premise_support(self, fig1_db):
        p = parse_pattern("<a !b c d>", fig1_db.dictionary)
        assert support(p, fig1_db, Theta.parse("weak-strict-total")) == 3

    def test_empty_database(self):
        d = Dictionary("ab")
        db = SequenceDatabase((), d)
        p = parse_pattern("<a !b a>", d)
        for theta in THETAS:
            assert support(p, db, theta) == 0

    @settings(max_examples=60)
    @given(st.data())
    def test_support_consistency(self, data):
        rng = random.Random(data.draw(st.integers(0, 10**6)))
        d = Dictionary("abcde")
        db = SequenceDatabase(
            tuple(random_sequence(rng) for _ in range(5)), d
        )
        p = random_pattern(rng)
        counts = all_theta_supports(p, db)
        for theta in THETAS:
            assert counts[theta.index] == support(p, db, theta)
        for emb in EmbeddingKind:
            weak, strong = weak_strong_support(p, db, emb, TOTAL)
            assert weak == counts[Theta(Occurrence.WEAK, emb, TOTAL).index]
            assert strong == counts[Theta(Occurrence.STRONG, emb, TOTAL).index]
