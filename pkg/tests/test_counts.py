"""Count collection: the event streams behind every probability table."""

import pytest

from namefinder import (
    AnnotatedSentence,
    CondTable,
    END_OF_SENTENCE,
    END_TOKEN,
    END_WORD,
    INTERNAL_CLASSES,
    NOT_A_NAME,
    ORGANIZATION,
    PERSON,
    Region,
    START_OF_SENTENCE,
    Token,
    TrainingError,
    UNKNOWN_WORD,
    Vocabulary,
    collect_counts,
    segment_classes,
    train,
)
from namefinder.counts import build_vocabulary
from reference import random_corpus

NAN = NOT_A_NAME


def sent(tokens, regions=()):
    return AnnotatedSentence(tokens=list(tokens), regions=list(regions))


def full_vocab(sentences):
    return build_vocabulary(sentences)


class TestSegmentClasses:
    def test_gaps_become_not_a_name(self):
        s = sent(["Mr.", "John", "Smith", "said", "hello", "."],
                 [Region(1, 3, PERSON)])
        assert segment_classes(s) == [
            (NAN, 0, 1), (PERSON, 1, 3), (NAN, 3, 6),
        ]

    def test_all_name(self):
        s = sent(["John"], [Region(0, 1, PERSON)])
        assert segment_classes(s) == [(PERSON, 0, 1)]

    def test_no_regions(self):
        assert segment_classes(sent(["a", "b"])) == [(NAN, 0, 2)]

    def test_adjacent_regions_stay_distinct(self):
        s = sent(["Ann", "Bob"], [Region(0, 1, PERSON), Region(1, 2, PERSON)])
        assert segment_classes(s) == [(PERSON, 0, 1), (PERSON, 1, 2)]


@pytest.fixture(scope="module")
def single_region_tables():
    corpus = [sent(["John", "runs"], [Region(0, 1, PERSON)])]
    return collect_counts(corpus, full_vocab(corpus), map_unknown=False)


@pytest.fixture(scope="module")
def multi_token_tables():
    corpus = [sent(["Mr.", "John", "Smith", "said", "hello", "."],
                   [Region(1, 3, PERSON)])]
    return collect_counts(corpus, full_vocab(corpus), map_unknown=False)


class TestSingleRegionSentence:
    """Every event for [John] runs, with John marked PERSON, by hand."""

    @pytest.fixture
    def tables(self, single_region_tables):
        return single_region_tables

    def test_class_transitions(self, tables):
        t = tables.class_transitions
        assert t.count((START_OF_SENTENCE, END_WORD), PERSON) == 1
        assert t.count((PERSON, "John"), NAN) == 1
        assert t.count((NAN, "runs"), END_OF_SENTENCE) == 1
        assert sum(t.total(c) for c in t.contexts()) == 3

    def test_class_backoff_levels(self, tables):
        assert tables.class_bigrams.count((START_OF_SENTENCE,), PERSON) == 1
        assert tables.class_bigrams.count((PERSON,), NAN) == 1
        assert tables.class_marginal.count((), PERSON) == 1
        assert tables.class_marginal.count((), END_OF_SENTENCE) == 1
        assert tables.class_marginal.total(()) == 3

    def test_first_words(self, tables):
        john = Token("John", "firstWord")
        runs = Token("runs", "lowerCase")
        assert tables.first_words.count((PERSON, START_OF_SENTENCE), john) == 1
        assert tables.first_words.count((NAN, PERSON), runs) == 1
        assert tables.begin_bigrams.count((PERSON,), john) == 1
        assert tables.begin_bigrams.count((NAN,), runs) == 1

    def test_single_word_region_emits_only_the_end_bigram(self, tables):
        t = tables.word_bigrams
        assert t.count(("John", "firstWord", PERSON), END_TOKEN) == 1
        assert t.total(("John", "firstWord", PERSON)) == 1
        assert t.count(("runs", "lowerCase", NAN), END_TOKEN) == 1

    def test_unigram_levels(self, tables):
        assert tables.word_unigrams.count((PERSON,), Token("John", "firstWord")) == 1
        assert tables.word_only.count((PERSON,), "John") == 1
        assert tables.feature_only.count((PERSON,), "firstWord") == 1
        assert tables.word_only.count((NAN,), "runs") == 1
        assert tables.feature_only.count((NAN,), "lowerCase") == 1


class TestMultiTokenRegion:
    @pytest.fixture
    def tables(self, multi_token_tables):
        return multi_token_tables

    def test_transition_contexts_use_previous_segment_last_word(self, tables):
        t = tables.class_transitions
        assert t.count((START_OF_SENTENCE, END_WORD), NAN) == 1
        assert t.count((NAN, "Mr."), PERSON) == 1
        assert t.count((PERSON, "Smith"), NAN) == 1
        assert t.count((NAN, "."), END_OF_SENTENCE) == 1

    def test_first_word_vs_inner_bigrams(self, tables):
        fw = tables.first_words
        assert fw.count((PERSON, NAN), Token("John", "initCap")) == 1
        bg = tables.word_bigrams
        assert bg.count(("John", "initCap", PERSON), Token("Smith", "initCap")) == 1
        assert bg.count(("Smith", "initCap", PERSON), END_TOKEN) == 1
        # The name-final word closes the region; the next word is counted
        # under the following segment, not as a name bigram.
        assert bg.total(("Smith", "initCap", PERSON)) == 1

    def test_not_a_name_bigrams(self, tables):
        bg = tables.word_bigrams
        assert bg.count(("Mr.", "firstWord", NAN), END_TOKEN) == 1
        assert bg.count(("said", "lowerCase", NAN), Token("hello", "lowerCase")) == 1
        assert bg.count(("hello", "lowerCase", NAN), Token(".", "other")) == 1
        assert bg.count((".", "other", NAN), END_TOKEN) == 1

    def test_word_feature_pairs_decompose(self, tables):
        # Bigram event mass per class equals the token count of its
        # segments: one event per token (successor or region end).
        for nc in (PERSON, NAN):
            contexts = [c for c in tables.word_bigrams.contexts() if c[2] == nc]
            bigram_mass = sum(tables.word_bigrams.total(c) for c in contexts)
            assert bigram_mass == tables.word_unigrams.total((nc,))
        assert tables.word_unigrams.total((PERSON,)) == 2
        assert tables.word_unigrams.total((NAN,)) == 4


class TestCountConsistency:
    def test_totals_and_uniques_match_event_sums(self, rng):
        corpus = random_corpus(rng, 60)
        tables = collect_counts(corpus, full_vocab(corpus), map_unknown=False)
        for name in tables.NAMES:
            table = getattr(tables, name)
            for context in table.contexts():
                events = table.events(context)
                assert table.total(context) == sum(events.values())
                assert table.unique(context) == len(events)
                assert all(count > 0 for count in events.values())

    def test_class_chain_totals_agree(self, rng):
        corpus = random_corpus(rng, 60)
        tables = collect_counts(corpus, full_vocab(corpus), map_unknown=False)
        # Collapsing transition contexts over the conditioned word gives
        # the class-bigram table; collapsing again gives the marginal.
        for nc_prev in INTERNAL_CLASSES + (START_OF_SENTENCE,):
            contexts = [c for c in tables.class_transitions.contexts()
                        if c[0] == nc_prev]
            for nc in INTERNAL_CLASSES + (END_OF_SENTENCE,):
                collapsed = sum(tables.class_transitions.count(c, nc)
                                for c in contexts)
                assert collapsed == tables.class_bigrams.count((nc_prev,), nc)
        marg = tables.class_marginal
        for nc in INTERNAL_CLASSES + (END_OF_SENTENCE,):
            collapsed = sum(tables.class_bigrams.count((p,), nc)
                            for p in INTERNAL_CLASSES + (START_OF_SENTENCE,))
            assert collapsed == marg.count((), nc)

    def test_first_word_totals_match_class_arrivals(self, rng):
        corpus = random_corpus(rng, 60)
        tables = collect_counts(corpus, full_vocab(corpus), map_unknown=False)
        for nc, nc_prev in tables.first_words.contexts():
            assert tables.first_words.total((nc, nc_prev)) == \
                tables.class_bigrams.count((nc_prev,), nc)

    def test_order_insensitive(self, rng):
        corpus = random_corpus(rng, 40)
        vocab = full_vocab(corpus)
        a = collect_counts(corpus, vocab, map_unknown=False)
        b = collect_counts(list(reversed(corpus)), vocab, map_unknown=False)
        for name in a.NAMES:
            assert getattr(a, name) == getattr(b, name)

    def test_empty_sentences_are_skipped(self):
        corpus = [sent([]), sent(["a"]), sent([])]
        tables = collect_counts(corpus, full_vocab(corpus), map_unknown=False)
        assert tables.class_marginal.total(()) == 2


class TestVocabulary:
    def test_first_seen_ids(self):
        corpus = [sent(["b", "a"]), sent(["a", "c"])]
        vocab = build_vocabulary(corpus)
        assert [vocab.id_of(w) for w in ("b", "a", "c")] == [1, 2, 3]
        assert len(vocab) == 3
        assert vocab.words() == ["b", "a", "c"]

    def test_frozen_vocab_maps_oov_to_sentinel(self):
        vocab = Vocabulary()
        vocab.add("x")
        vocab.freeze()
        assert vocab.add("y") == Vocabulary.UNKNOWN_ID
        assert vocab.id_of("y") == Vocabulary.UNKNOWN_ID
        assert vocab.map("y") == UNKNOWN_WORD
        assert vocab.map("x") == "x"

    def test_sentinels_always_known(self):
        vocab = Vocabulary().freeze()
        for w in (END_WORD, UNKNOWN_WORD):
            assert vocab.known(w)
            assert vocab.map(w) == w
        assert not vocab.known("word")


class TestCondTable:
    def test_update_merges(self):
        a = CondTable()
        a.add(("x",), "e1")
        a.add(("x",), "e2", 2)
        b = CondTable()
        b.add(("x",), "e1", 3)
        b.add(("y",), "e3")
        a.update(b)
        assert a.count(("x",), "e1") == 4
        assert a.total(("x",)) == 6
        assert a.count(("y",), "e3") == 1

    def test_missing_context_is_empty(self):
        t = CondTable()
        assert t.total(("nope",)) == 0
        assert t.unique(("nope",)) == 0
        assert t.events(("nope",)) == {}


class TestTrain:
    def test_needs_two_sentences(self):
        with pytest.raises(TrainingError, match="held-out halves"):
            train([sent(["a"])])
        with pytest.raises(TrainingError):
            train([sent(["a"]), sent([])])

    def test_held_out_unknown_counts_by_hand(self):
        corpus = [
            sent(["alpha", "beta"]),
            sent(["alpha", "gamma"]),
            sent(["beta", "gamma"]),
            sent(["alpha", "delta"]),
        ]
        model = train(corpus)
        # Halves are [s1, s2] and [s3, s4]; each is counted against the
        # other's vocabulary, so only "delta" maps to the sentinel.
        words = model.unknown.word_only.events((NAN,))
        assert words == {"alpha": 3, "beta": 2, "gamma": 2, UNKNOWN_WORD: 1}
        # The sentinel keeps the real word's feature.
        unigrams = model.unknown.word_unigrams.events((NAN,))
        assert unigrams[Token(UNKNOWN_WORD, "lowerCase")] == 1
        # Transition contexts use mapped words too.
        t = model.unknown.class_transitions
        assert t.count((NAN, UNKNOWN_WORD), END_OF_SENTENCE) == 1
        assert t.count((NAN, "gamma"), END_OF_SENTENCE) == 2
        assert t.count((NAN, "beta"), END_OF_SENTENCE) == 1
        bg = model.unknown.word_bigrams.events(("alpha", "lowerCase", NAN))
        assert bg == {
            Token(UNKNOWN_WORD, "lowerCase"): 1,
            Token("beta", "lowerCase"): 1,
            Token("gamma", "lowerCase"): 1,
        }

    def test_main_tables_see_every_word(self):
        corpus = [
            sent(["alpha", "beta"]),
            sent(["alpha", "gamma"]),
            sent(["beta", "gamma"]),
            sent(["alpha", "delta"]),
        ]
        model = train(corpus)
        assert model.main.word_only.events((NAN,)) == {
            "alpha": 3, "beta": 2, "gamma": 2, "delta": 1,
        }
        assert UNKNOWN_WORD not in model.main.word_only.events((NAN,))
        assert [model.vocabulary.id_of(w)
                for w in ("alpha", "beta", "gamma", "delta")] == [1, 2, 3, 4]

    def test_fully_shared_vocabulary_leaves_no_unknown_words(self):
        corpus = [sent(["a", "b"]), sent(["a", "b"]), sent(["b", "a"]),
                  sent(["a", "b"])]
        model = train(corpus)
        assert UNKNOWN_WORD not in model.unknown.word_only.events((NAN,))

    def test_unknown_mass_doubles_every_sentence(self, rng):
        # Both passes together count each sentence exactly once.
        corpus = random_corpus(rng, 20)
        model = train(corpus)
        total_tokens = sum(len(s.tokens) for s in corpus)
        assert model.unknown.class_marginal.total(()) == \
            model.main.class_marginal.total(())
        assert model.unknown.word_only.total((NAN,)) + sum(
            model.unknown.word_only.total((nc,))
            for nc in INTERNAL_CLASSES if nc != NAN
        ) == total_tokens

    def test_region_classes_flow_into_tables(self):
        corpus = [
            sent(["Acme", "Corp.", "won"], [Region(0, 2, ORGANIZATION)]),
            sent(["it", "won"]),
        ]
        model = train(corpus)
        assert model.main.word_only.count((ORGANIZATION,), "Acme") == 1
        assert model.main.first_words.count(
            (ORGANIZATION, START_OF_SENTENCE), Token("Acme", "firstWord")) == 1
