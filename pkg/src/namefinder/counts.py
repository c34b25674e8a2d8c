"""Count-table construction from annotated sentences.

Training walks each sentence as the generative story tells it: a class
transition at every region boundary (conditioned on the previous class
and the previous real word), a first-word event per region, a bigram
event per subsequent word, and a ``+end+`` event closing each region.
Lower-order tables (class bigrams and marginals, begin-bigrams, word
unigrams, word-only and feature-only counts) are filled from the same
walk so every back-off level is estimated from one pass.

The unknown-word tables come from a two-pass held-out scheme: build a
vocabulary on the first half of the corpus and count the second half
against it (out-of-vocabulary words becoming the ``+unk+`` sentinel,
keeping their real word-feature), then swap the halves and add the two
sets of counts together.  The main tables use all sentences and the
full vocabulary.
"""

from dataclasses import dataclass, field

from .corpus import (
    AnnotatedSentence,
    END_OF_SENTENCE,
    INTERNAL_CLASSES,
    NOT_A_NAME,
    START_OF_SENTENCE,
)
from .features import (
    BEGIN_WORD,
    END_TOKEN,
    END_WORD,
    FeatureConfig,
    Token,
    UNKNOWN_WORD,
    compute_feature,
)


class TrainingError(ValueError):
    """Raised when a corpus cannot be trained on (e.g. too small)."""


class Vocabulary:
    """Word -> id map, growable until frozen.

    Ids start at 1; id 0 is reserved for the unknown-word sentinel.  Size
    counts distinct observed words, never sentinels.
    """

    UNKNOWN_ID = 0

    def __init__(self):
        self._ids = {}
        self._frozen = False

    def add(self, word: str) -> int:
        if word in self._ids:
            return self._ids[word]
        if self._frozen:
            return self.UNKNOWN_ID
        next_id = len(self._ids) + 1
        self._ids[word] = next_id
        return next_id

    def freeze(self):
        self._frozen = True
        return self

    @property
    def frozen(self) -> bool:
        return self._frozen

    def id_of(self, word: str) -> int:
        return self._ids.get(word, self.UNKNOWN_ID)

    def known(self, word: str) -> bool:
        """Sentinels count as known; they are never out-of-vocabulary."""
        return word in self._ids or word in (END_WORD, BEGIN_WORD, UNKNOWN_WORD)

    def map(self, word: str) -> str:
        """Replace an out-of-vocabulary word by the unknown sentinel."""
        return word if self.known(word) else UNKNOWN_WORD

    def words(self):
        """Words in id order (stable first-seen order)."""
        return sorted(self._ids, key=self._ids.get)

    def __contains__(self, word):
        return word in self._ids

    def __len__(self):
        return len(self._ids)


class CondTable:
    """Integer event counts keyed by conditioning context.

    Contexts and events are strings or flat tuples of strings.  The
    context total and unique-outcome count are maintained incrementally;
    both are pure functions of the event counts.
    """

    def __init__(self):
        self._events = {}
        self._totals = {}

    def add(self, context, event, count=1):
        bucket = self._events.setdefault(context, {})
        bucket[event] = bucket.get(event, 0) + count
        self._totals[context] = self._totals.get(context, 0) + count

    def count(self, context, event) -> int:
        return self._events.get(context, {}).get(event, 0)

    def total(self, context) -> int:
        return self._totals.get(context, 0)

    def unique(self, context) -> int:
        return len(self._events.get(context, ()))

    def events(self, context) -> dict:
        return self._events.get(context, {})

    def contexts(self):
        return self._events.keys()

    def update(self, other: "CondTable"):
        """Add every count from another table into this one."""
        for context, bucket in other._events.items():
            for event, count in bucket.items():
                self.add(context, event, count)

    def items(self):
        """Yield (context, event, count) triples in storage order."""
        for context, bucket in self._events.items():
            for event, count in bucket.items():
                yield context, event, count

    def __eq__(self, other):
        return isinstance(other, CondTable) and self._events == other._events

    def __len__(self):
        return sum(len(bucket) for bucket in self._events.values())


@dataclass
class CountTables:
    """All count tables for one model (main or unknown-word).

    Context/event shapes:
      class_transitions  (nc_prev, w_prev) -> nc
      class_bigrams      (nc_prev,)        -> nc
      class_marginal     ()                -> nc
      first_words        (nc, nc_prev)     -> Token
      begin_bigrams      (nc,)             -> Token   (first words, pooled)
      word_bigrams       (w_prev, f_prev, nc) -> Token (includes +end+ events)
      word_unigrams      (nc,)             -> Token
      word_only          (nc,)             -> word
      feature_only       (nc,)             -> feature
    """

    class_transitions: CondTable = field(default_factory=CondTable)
    class_bigrams: CondTable = field(default_factory=CondTable)
    class_marginal: CondTable = field(default_factory=CondTable)
    first_words: CondTable = field(default_factory=CondTable)
    begin_bigrams: CondTable = field(default_factory=CondTable)
    word_bigrams: CondTable = field(default_factory=CondTable)
    word_unigrams: CondTable = field(default_factory=CondTable)
    word_only: CondTable = field(default_factory=CondTable)
    feature_only: CondTable = field(default_factory=CondTable)

    NAMES = (
        "class_transitions", "class_bigrams", "class_marginal",
        "first_words", "begin_bigrams", "word_bigrams",
        "word_unigrams", "word_only", "feature_only",
    )

    def tables(self):
        return {name: getattr(self, name) for name in self.NAMES}

    def update(self, other: "CountTables"):
        for name in self.NAMES:
            getattr(self, name).update(getattr(other, name))


@dataclass(frozen=True)
class TrainedModel:
    """Immutable result of training: vocabulary plus two table sets."""

    vocabulary: Vocabulary
    main: CountTables
    unknown: CountTables
    feature_config: FeatureConfig
    classes: tuple = INTERNAL_CLASSES


def segment_classes(sentence: AnnotatedSentence):
    """Cover the sentence with (name_class, start, end) segments.

    Name regions keep their spans; gaps become NOT-A-NAME segments.
    Adjacent name regions stay distinct segments even when same-class.
    """
    segments = []
    pos = 0
    for region in sentence.regions:
        if region.start > pos:
            segments.append((NOT_A_NAME, pos, region.start))
        segments.append((region.name_class, region.start, region.end))
        pos = region.end
    if pos < len(sentence.tokens):
        segments.append((NOT_A_NAME, pos, len(sentence.tokens)))
    return segments


def collect_counts(sentences, vocab: Vocabulary, map_unknown: bool,
                   config: FeatureConfig = FeatureConfig()) -> CountTables:
    """Count every event the generative story produces for the corpus.

    With map_unknown, out-of-vocabulary words are replaced by the
    unknown sentinel before counting; the word-feature is computed from
    the real word first, so the sentinel keeps the original feature.
    """
    if map_unknown and not vocab.frozen:
        raise ValueError("map_unknown requires a frozen vocabulary")
    t = CountTables()
    for sentence in sentences:
        if not sentence.tokens:
            continue
        tokens = []
        for i, word in enumerate(sentence.tokens):
            feature = compute_feature(word, is_first_word=(i == 0), config=config)
            if map_unknown:
                word = vocab.map(word)
            tokens.append(Token(word, feature))
        segments = segment_classes(sentence)
        nc_prev, w_prev = START_OF_SENTENCE, END_WORD
        for nc, start, end in segments:
            t.class_transitions.add((nc_prev, w_prev), nc)
            t.class_bigrams.add((nc_prev,), nc)
            t.class_marginal.add((), nc)
            first = tokens[start]
            t.first_words.add((nc, nc_prev), first)
            t.begin_bigrams.add((nc,), first)
            for j in range(start, end):
                tok = tokens[j]
                t.word_unigrams.add((nc,), tok)
                t.word_only.add((nc,), tok.word)
                t.feature_only.add((nc,), tok.feature)
                if j > start:
                    prev = tokens[j - 1]
                    t.word_bigrams.add((prev.word, prev.feature, nc), tok)
            last = tokens[end - 1]
            t.word_bigrams.add((last.word, last.feature, nc), END_TOKEN)
            nc_prev, w_prev = nc, last.word
        t.class_transitions.add((nc_prev, w_prev), END_OF_SENTENCE)
        t.class_bigrams.add((nc_prev,), END_OF_SENTENCE)
        t.class_marginal.add((), END_OF_SENTENCE)
    return t


def build_vocabulary(sentences) -> Vocabulary:
    """First-seen-order vocabulary over every token, frozen."""
    vocab = Vocabulary()
    for sentence in sentences:
        for word in sentence.tokens:
            vocab.add(word)
    return vocab.freeze()


def train(sentences, config: FeatureConfig = FeatureConfig()) -> TrainedModel:
    """Build a full model: main tables plus held-out unknown-word tables.

    Main tables use all sentences and the full vocabulary.  Unknown
    tables add two passes: the second half counted against the first
    half's vocabulary, and vice versa.
    """
    sentences = [s for s in sentences if s.tokens]
    if len(sentences) < 2:
        raise TrainingError("need at least 2 sentences to form held-out halves, got %d"
                            % len(sentences))
    vocabulary = build_vocabulary(sentences)
    main = collect_counts(sentences, vocabulary, map_unknown=False, config=config)
    half = (len(sentences) + 1) // 2
    part_a, part_b = sentences[:half], sentences[half:]
    vocab_a = build_vocabulary(part_a)
    vocab_b = build_vocabulary(part_b)
    unknown = collect_counts(part_b, vocab_a, map_unknown=True, config=config)
    unknown.update(collect_counts(part_a, vocab_b, map_unknown=True, config=config))
    return TrainedModel(vocabulary, main, unknown, config)
