"""Viterbi decoding of sentences into name-class regions.

One theory is carried per internal class at every token position.  A
step from token t-1 to token t either CONTINUEs the open region (same
class, one bigram factor) or closes it at a BOUNDARY (region-end factor,
class transition conditioned on the previous word, and a first-word
factor for the new region).  Scores are natural logs of the smoothed
probabilities; each mixture is computed in linear space first.

Ties are broken deterministically: CONTINUE beats BOUNDARY at equal
score, and earlier classes in the fixed inventory order beat later
ones.  Backtracing the boundary flags yields the region segmentation;
NOT-A-NAME stretches produce no Region records.

The decoder memoizes per-word probability vectors (transition rows,
first-word rows, bigram and region-end vectors), so throughput on large
documents is dominated by dictionary lookups, not mixture evaluation.
Decoding time is linear in token count.
"""

import math
from dataclasses import dataclass

from .corpus import (
    AnnotatedSentence,
    END_OF_SENTENCE,
    INTERNAL_CLASSES,
    NOT_A_NAME,
    Region,
    START_OF_SENTENCE,
    tokenize,
)
from .counts import TrainedModel
from .estimator import p_class_transition, p_first_word, p_next_word
from .features import END_TOKEN, END_WORD, Token, compute_feature

_K = len(INTERNAL_CLASSES)


@dataclass
class DecodeResult:
    """Decoded sentence plus the path that produced it.

    path_classes holds one internal class per token; path_boundaries is
    True where a region starts (always at token 0).  The sentence's
    regions are the non-NOT-A-NAME segments of that path.
    """

    sentence: AnnotatedSentence
    log_score: float
    path_classes: tuple
    path_boundaries: tuple


def regions_from_path(classes, boundaries):
    """Segment a (class, boundary) path into Region records."""
    regions = []
    start = 0
    n = len(classes)
    for t in range(1, n + 1):
        if t == n or boundaries[t]:
            if classes[start] != NOT_A_NAME:
                regions.append(Region(start, t, classes[start]))
            start = t
    return regions


def score_path(tokens, classes, boundaries, model: TrainedModel) -> float:
    """Log-probability of one fully specified labeled segmentation.

    Sums exactly the factors the decoder maximizes over; used to check
    that reported scores reconstruct.
    """
    log = math.log
    total = 0.0
    nc_prev, w_prev = START_OF_SENTENCE, END_WORD
    for t, token in enumerate(tokens):
        nc = classes[t]
        if t == 0 or boundaries[t]:
            if t > 0:
                total += log(p_next_word(END_TOKEN, tokens[t - 1], nc_prev, model))
            total += log(p_class_transition(nc, nc_prev, w_prev, model))
            total += log(p_first_word(token, nc, nc_prev, model))
            nc_prev = nc
        else:
            total += log(p_next_word(token, tokens[t - 1], nc, model))
        w_prev = token.word
    total += log(p_next_word(END_TOKEN, tokens[-1], classes[-1], model))
    total += log(p_class_transition(END_OF_SENTENCE, classes[-1], w_prev, model))
    return total


class Decoder:
    """Reusable decoder over one trained model, with probability caches."""

    def __init__(self, model: TrainedModel):
        self.model = model
        self.config = model.feature_config
        log = math.log
        self._init_trans = [
            log(p_class_transition(nc, START_OF_SENTENCE, END_WORD, model))
            for nc in INTERNAL_CLASSES
        ]
        self._trans_cache = {}
        self._fw_cache = {}
        self._cont_cache = {}
        self._end_cache = {}

    def _trans(self, w_prev):
        """(by_target, to_end): by_target[j][i] = log Pr(class j | class i, w_prev)."""
        cached = self._trans_cache.get(w_prev)
        if cached is None:
            log, model = math.log, self.model
            by_target = [
                [log(p_class_transition(nc, nc_prev, w_prev, model))
                 for nc_prev in INTERNAL_CLASSES]
                for nc in INTERNAL_CLASSES
            ]
            to_end = [log(p_class_transition(END_OF_SENTENCE, nc_prev, w_prev, model))
                      for nc_prev in INTERNAL_CLASSES]
            cached = self._trans_cache[w_prev] = (by_target, to_end)
        return cached

    def _fw(self, token):
        """fw[j][i] = log Pr(token opens class j | j, previous class i)."""
        cached = self._fw_cache.get(token)
        if cached is None:
            log, model = math.log, self.model
            cached = self._fw_cache[token] = [
                [log(p_first_word(token, nc, nc_prev, model))
                 for nc_prev in INTERNAL_CLASSES]
                for nc in INTERNAL_CLASSES
            ]
        return cached

    def _cont(self, prev, token):
        key = (prev, token)
        cached = self._cont_cache.get(key)
        if cached is None:
            log, model = math.log, self.model
            cached = self._cont_cache[key] = [
                log(p_next_word(token, prev, nc, model)) for nc in INTERNAL_CLASSES
            ]
        return cached

    def _end(self, prev):
        cached = self._end_cache.get(prev)
        if cached is None:
            log, model = math.log, self.model
            cached = self._end_cache[prev] = [
                log(p_next_word(END_TOKEN, prev, nc, model)) for nc in INTERNAL_CLASSES
            ]
        return cached

    def decode_sentence(self, words) -> DecodeResult:
        words = list(words)
        if not words:
            raise ValueError("cannot decode an empty sentence")
        tokens = [Token(w, compute_feature(w, i == 0, self.config))
                  for i, w in enumerate(words)]
        n = len(tokens)
        log, model = math.log, self.model

        scores = [self._init_trans[j] +
                  log(p_first_word(tokens[0], INTERNAL_CLASSES[j],
                                   START_OF_SENTENCE, model))
                  for j in range(_K)]
        backptrs = []
        for t in range(1, n):
            prev_tok, tok = tokens[t - 1], tokens[t]
            end_vec = self._end(prev_tok)
            cont_vec = self._cont(prev_tok, tok)
            by_target, _ = self._trans(prev_tok.word)
            fw = self._fw(tok)
            bscore = [scores[i] + end_vec[i] for i in range(_K)]
            new_scores = [0.0] * _K
            pointers = [None] * _K
            for j in range(_K):
                # Candidate order fixes the tie-break: CONTINUE first,
                # then BOUNDARY by class-inventory order, strict > wins.
                best = scores[j] + cont_vec[j]
                best_ptr = (j, False)
                row_t = by_target[j]
                row_f = fw[j]
                for i in range(_K):
                    cand = bscore[i] + row_t[i] + row_f[i]
                    if cand > best:
                        best = cand
                        best_ptr = (i, True)
                new_scores[j] = best
                pointers[j] = best_ptr
            scores = new_scores
            backptrs.append(pointers)

        last = tokens[-1]
        end_vec = self._end(last)
        _, to_end = self._trans(last.word)
        best_j = 0
        best_final = scores[0] + end_vec[0] + to_end[0]
        for j in range(1, _K):
            cand = scores[j] + end_vec[j] + to_end[j]
            if cand > best_final:
                best_final = cand
                best_j = j
        classes = [best_j]
        bounds = []
        j = best_j
        for t in range(n - 1, 0, -1):
            i, is_boundary = backptrs[t - 1][j]
            bounds.append(is_boundary)
            j = i
            classes.append(j)
        classes.reverse()
        bounds.reverse()
        path_classes = tuple(INTERNAL_CLASSES[c] for c in classes)
        path_boundaries = (True, *bounds)
        sentence = AnnotatedSentence(
            words, regions_from_path(path_classes, path_boundaries))
        return DecodeResult(sentence, best_final, path_classes, path_boundaries)

    def decode_document(self, text: str):
        return [self.decode_sentence(words) for words in tokenize(text)]


def decode_sentence(words, model: TrainedModel) -> DecodeResult:
    return Decoder(model).decode_sentence(words)


def decode_document(text: str, model: TrainedModel):
    return Decoder(model).decode_document(text)
