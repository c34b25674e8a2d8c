"""Smoothed probability estimation over the trained count tables.

Each of the three distribution families (class transition, first word
of a region, subsequent word) is a back-off chain: the most specific
conditional estimate is mixed with progressively less conditioned ones,
bottoming out at a uniform floor.  The mixing weight for each level is
computed on the fly from that level's sample size and diversity:

    lambda = (1 - old_c/c) * 1/(1 + unique/c)

where c is the context's sample size at this level, unique the number
of distinct outcomes seen with it, and old_c the sample size at the
previous (more specific) level, 0 at the top.  A level with c = 0 gets
weight 0 and the mass flows past it.  Mixing happens in linear space;
callers take logs afterward.

Queries route between the main tables and the held-out unknown-word
tables: if any word involved in the conditioning bigram is outside the
training vocabulary, the unknown tables answer, with out-of-vocabulary
words mapped to the ``+unk+`` sentinel for lookup.

The uniform floors are 1/(number of successor classes) for class
transitions and (1/|V|)(1/14) for both word families.  The word-family
floor is used exactly as written by default even though the augmented
event space (vocabulary plus the unknown sentinel, plus ``+end+`` for
the subsequent-word family) is slightly larger; pass normalized_floor
to renormalize it over the augmented space, which makes each family sum
to exactly 1.
"""

from .corpus import INTERNAL_CLASSES
from .counts import CountTables, TrainedModel
from .features import NUM_WORD_FEATURES, Token, UNKNOWN_WORD

# Successor space of a class transition: the internal classes plus
# END-OF-SENTENCE.  START-OF-SENTENCE is never a successor.
NUM_SUCCESSOR_CLASSES = len(INTERNAL_CLASSES) + 1


def lambda_weight(c_y: int, old_c_y: int, unique_outcomes: int) -> float:
    """Mixing weight of the direct estimate at one back-off level.

    The complement 1 - lambda goes to the rest of the chain.  c_y = 0
    is defined as 0 (skip the level), not an error.
    """
    if c_y == 0:
        return 0.0
    return (1.0 - old_c_y / c_y) / (1.0 + unique_outcomes / c_y)


def _mix(levels, floor: float) -> float:
    """Fold (probability, sample_size, unique_outcomes) levels over the floor.

    Levels run most-specific first.  old_c chains: each level's old_c is
    the previous level's sample size, 0 at the top.  Whatever weight
    survives the chain lands on the floor.
    """
    total = 0.0
    weight = 1.0
    old_c = 0
    for prob, c_y, unique in levels:
        lam = lambda_weight(c_y, old_c, unique)
        total += weight * lam * prob
        weight *= 1.0 - lam
        old_c = c_y
    return total + weight * floor


def _level(table, context, event):
    """One empirical level: (MLE ratio, sample size, unique outcomes)."""
    c_y = table.total(context)
    if c_y == 0:
        return 0.0, 0, 0
    return table.count(context, event) / c_y, c_y, table.unique(context)


def _product_level(tables: CountTables, nc: str, word: str, feature: str):
    """The Pr(w|NC)*Pr(f|NC) level shared by both word chains.

    Its sample size equals the previous level's (both count every
    emission in the class), so the first lambda factor is 0 and the
    level never receives weight; it is computed for chain fidelity.
    """
    c_y = tables.word_only.total((nc,))
    if c_y == 0:
        return 0.0, 0, 0
    p_word = tables.word_only.count((nc,), word) / c_y
    p_feat = tables.feature_only.count((nc,), feature) / c_y
    return p_word * p_feat, c_y, tables.word_only.unique((nc,))


# --- Per-family mixtures against an explicit table set ----------------------

def p_class_transition_from(tables: CountTables, nc: str, nc_prev: str,
                            w_prev: str, normalized_floor: bool = False) -> float:
    """Pr(NC | NC_prev, w_prev) from the given tables; always > 0.

    The floor 1/(successor count) is already a proper distribution, so
    normalized_floor changes nothing for this family.
    """
    levels = [
        _level(tables.class_transitions, (nc_prev, w_prev), nc),
        _level(tables.class_bigrams, (nc_prev,), nc),
        _level(tables.class_marginal, (), nc),
    ]
    return _mix(levels, 1.0 / NUM_SUCCESSOR_CLASSES)


def p_first_word_from(tables: CountTables, token: Token, nc: str, nc_prev: str,
                      vocab_size: int, normalized_floor: bool = False) -> float:
    """Pr(<w,f> as first word of an NC region | NC, NC_prev); always > 0."""
    levels = [
        _level(tables.first_words, (nc, nc_prev), token),
        _level(tables.begin_bigrams, (nc,), token),
        _level(tables.word_unigrams, (nc,), token),
        _product_level(tables, nc, token.word, token.feature),
    ]
    if normalized_floor:
        floor = 1.0 / ((vocab_size + 1) * NUM_WORD_FEATURES)
    else:
        floor = 1.0 / (vocab_size * NUM_WORD_FEATURES)
    return _mix(levels, floor)


def p_next_word_from(tables: CountTables, token: Token, prev: Token, nc: str,
                     vocab_size: int, normalized_floor: bool = False) -> float:
    """Pr(<w,f> | previous <w,f>, NC); token may be the +end+ sentinel."""
    levels = [
        _level(tables.word_bigrams, (prev.word, prev.feature, nc), token),
        _level(tables.word_unigrams, (nc,), token),
        _product_level(tables, nc, token.word, token.feature),
    ]
    if normalized_floor:
        # +1 for the unknown sentinel, +1 outcome for <+end+, other>.
        floor = 1.0 / ((vocab_size + 1) * NUM_WORD_FEATURES + 1)
    else:
        floor = 1.0 / (vocab_size * NUM_WORD_FEATURES)
    return _mix(levels, floor)


# --- Routed public queries ---------------------------------------------------

def _tables_for(model: TrainedModel, *words) -> CountTables:
    for word in words:
        if not model.vocabulary.known(word):
            return model.unknown
    return model.main


def select_tables(w: str, w_prev: str, model: TrainedModel) -> CountTables:
    """Unknown-word tables iff either word of the bigram is unknown."""
    return _tables_for(model, w, w_prev)


def _lookup(model: TrainedModel, token: Token) -> Token:
    if model.vocabulary.known(token.word):
        return token
    return Token(UNKNOWN_WORD, token.feature)


def p_class_transition(nc: str, nc_prev: str, w_prev: str, model: TrainedModel,
                       normalized_floor: bool = False) -> float:
    """Pr(NC | NC_prev, w_prev), conditioned on the word only, never its
    feature.  w_prev is +end+ exactly when NC_prev is START-OF-SENTENCE."""
    tables = _tables_for(model, w_prev)
    w_prev = w_prev if model.vocabulary.known(w_prev) else UNKNOWN_WORD
    return p_class_transition_from(tables, nc, nc_prev, w_prev, normalized_floor)


def p_first_word(token: Token, nc: str, nc_prev: str, model: TrainedModel,
                 normalized_floor: bool = False) -> float:
    """Pr(token opens an NC region | NC, NC_prev)."""
    tables = _tables_for(model, token.word)
    return p_first_word_from(tables, _lookup(model, token), nc, nc_prev,
                             len(model.vocabulary), normalized_floor)


def p_next_word(token: Token, prev: Token, nc: str, model: TrainedModel,
                normalized_floor: bool = False) -> float:
    """Pr(token | prev token, NC) inside a region; query the +end+ sentinel
    as token to get the region-closing probability."""
    tables = _tables_for(model, token.word, prev.word)
    return p_next_word_from(tables, _lookup(model, token), _lookup(model, prev),
                            nc, len(model.vocabulary), normalized_floor)
