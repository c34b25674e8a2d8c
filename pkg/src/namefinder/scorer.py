"""Precision/recall/F-measure scoring of decoded output against a key.

A response region is correct only on an exact match: same sentence,
same token span, same class.  F is the weighted harmonic mean
(beta^2 + 1)PR / (beta^2 R + P); degenerate denominators score 0 so the
scorer is total.  Error rate is 100 minus the F-measure percentage.
"""

from dataclasses import dataclass

from .corpus import NAME_CLASSES


class AlignmentError(ValueError):
    """Key and response tokenizations differ."""


@dataclass(frozen=True)
class Tally:
    """Counts and derived measures for one class (or overall)."""

    correct: int
    responses: int
    keys: int
    precision: float
    recall: float
    f_measure: float


@dataclass(frozen=True)
class ScoreReport:
    overall: Tally
    per_class: dict
    beta: float


def _tally(correct, responses, keys, beta):
    precision = correct / responses if responses else 0.0
    recall = correct / keys if keys else 0.0
    if precision == 0.0 and recall == 0.0:
        f_measure = 0.0
    else:
        b2 = beta * beta
        f_measure = (b2 + 1) * recall * precision / (b2 * recall + precision)
    return Tally(correct, responses, keys, precision, recall, f_measure)


def _check_alignment(key, response):
    if len(key) != len(response):
        raise AlignmentError("sentence counts differ: key has %d, response has %d"
                             % (len(key), len(response)))
    for i, (k, r) in enumerate(zip(key, response)):
        if k.tokens != r.tokens:
            for t, (kw, rw) in enumerate(zip(k.tokens, r.tokens)):
                if kw != rw:
                    raise AlignmentError(
                        "sentence %d, token %d: key %r vs response %r"
                        % (i + 1, t + 1, kw, rw))
            raise AlignmentError(
                "sentence %d: token counts differ (key %d, response %d)"
                % (i + 1, len(k.tokens), len(r.tokens)))


def _region_set(sentences):
    return {(i, r.start, r.end, r.name_class)
            for i, s in enumerate(sentences) for r in s.regions}


def score(key, response, beta: float = 1.0) -> ScoreReport:
    """Score response sentences against key sentences.

    Both are sequences of AnnotatedSentence over identical tokens; a
    divergence raises AlignmentError naming the first mismatch.
    """
    if beta <= 0:
        raise ValueError("beta must be positive, got %r" % (beta,))
    key, response = list(key), list(response)
    _check_alignment(key, response)
    key_regions = _region_set(key)
    response_regions = _region_set(response)
    matched = key_regions & response_regions
    per_class = {}
    for nc in NAME_CLASSES:
        per_class[nc] = _tally(
            sum(1 for m in matched if m[3] == nc),
            sum(1 for m in response_regions if m[3] == nc),
            sum(1 for m in key_regions if m[3] == nc),
            beta)
    overall = _tally(len(matched), len(response_regions), len(key_regions), beta)
    return ScoreReport(overall, per_class, beta)


def error_rate(report: ScoreReport) -> float:
    """100 minus the overall F-measure expressed as a percentage."""
    return 100.0 * (1.0 - report.overall.f_measure)


def format_report(report: ScoreReport) -> str:
    """Human-readable table plus one machine-readable line per class."""
    lines = ["%-14s %8s %10s %6s %7s %7s %7s"
             % ("class", "correct", "responses", "keys", "P", "R", "F")]
    rows = [(nc, report.per_class[nc]) for nc in NAME_CLASSES]
    rows.append(("ALL", report.overall))
    for name, t in rows:
        lines.append("%-14s %8d %10d %6d %7.3f %7.3f %7.3f"
                     % (name, t.correct, t.responses, t.keys,
                        t.precision, t.recall, t.f_measure))
    for name, t in rows:
        lines.append("%s %.3f %.3f %.3f" % (name, t.precision, t.recall, t.f_measure))
    return "\n".join(lines)
