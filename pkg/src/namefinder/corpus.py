"""Annotated-corpus parsing, tokenization and emission.

The corpus format is plain UTF-8 text with inline tags marking name
regions:

    <ENAMEX TYPE="PERSON">Bill Gates</ENAMEX> was born .

Tag elements are ENAMEX (PERSON, ORGANIZATION, LOCATION), TIMEX (DATE,
TIME) and NUMEX (MONEY, PERCENT).  Tags never nest and never span a
sentence boundary.  Literal ``&``, ``<`` and ``>`` in text must be
written ``&amp;``, ``&lt;`` and ``&gt;``.

The tokenizer is rule-based: it splits on whitespace, detaches clause
and sentence punctuation, and keeps digits, commas, periods, slashes
and dashes inside tokens so that numeric strings like ``23,000.00`` or
``11/9/89`` survive whole.  A small closed abbreviation list blocks
both the punctuation split and the sentence break.  Sentences end
after a bare ``.``, ``!`` or ``?`` token that was followed by
whitespace in the input.
"""

import random
import re
from dataclasses import dataclass, field

# Name classes, in fixed inventory order.  The order matters: the decoder
# breaks ties by it and the scorer reports in it.
PERSON = "PERSON"
ORGANIZATION = "ORGANIZATION"
LOCATION = "LOCATION"
TIME = "TIME"
DATE = "DATE"
PERCENT = "PERCENT"
MONEY = "MONEY"
NOT_A_NAME = "NOT-A-NAME"

INTERNAL_CLASSES = (PERSON, ORGANIZATION, LOCATION, TIME, DATE, PERCENT, MONEY, NOT_A_NAME)
NAME_CLASSES = INTERNAL_CLASSES[:-1]  # the seven classes that mark regions

# Pseudo-classes used only as transition contexts; they never emit tokens.
START_OF_SENTENCE = "START-OF-SENTENCE"
END_OF_SENTENCE = "END-OF-SENTENCE"

# Tag element for each region class.
_ELEMENT_OF_CLASS = {
    PERSON: "ENAMEX",
    ORGANIZATION: "ENAMEX",
    LOCATION: "ENAMEX",
    DATE: "TIMEX",
    TIME: "TIMEX",
    MONEY: "NUMEX",
    PERCENT: "NUMEX",
}
_CLASSES_OF_ELEMENT = {
    "ENAMEX": {PERSON, ORGANIZATION, LOCATION},
    "TIMEX": {DATE, TIME},
    "NUMEX": {MONEY, PERCENT},
}


class ParseError(ValueError):
    """Raised for malformed annotated input, with line/column position."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = "line %d, column %d: %s" % (line, column, message)
        super().__init__(message)


@dataclass(frozen=True)
class Region:
    """A typed name span over token indices [start, end)."""

    start: int
    end: int
    name_class: str

    def __post_init__(self):
        if not 0 <= self.start < self.end:
            raise ValueError("region must satisfy 0 <= start < end, got (%d, %d)"
                             % (self.start, self.end))
        if self.name_class not in NAME_CLASSES:
            raise ValueError("not a name class: %r" % (self.name_class,))


@dataclass
class AnnotatedSentence:
    """A token sequence plus disjoint, sorted name regions."""

    tokens: list = field(default_factory=list)
    regions: list = field(default_factory=list)

    def validate(self):
        prev_end = 0
        for region in self.regions:
            if region.start < prev_end:
                raise ValueError("regions overlap or are unsorted: %r" % (self.regions,))
            if region.end > len(self.tokens):
                raise ValueError("region %r exceeds sentence length %d"
                                 % (region, len(self.tokens)))
            prev_end = region.end
        return self


# --- Tokenizer -------------------------------------------------------------

TERMINALS = {".", "!", "?"}
_OPENERS = set("([{\"'")
_TRAILERS = set(")]}\"',;:.!?")

# Closed list; these keep their trailing period and never end a sentence.
ABBREVIATIONS = {"Mr.", "Mrs.", "Dr.", "M.", "St.", "Co.", "Inc.", "Corp."}


def _split_chunk(chunk):
    """Split one whitespace-delimited chunk into tokens."""
    lead = []
    while len(chunk) > 1 and chunk[0] in _OPENERS:
        lead.append(chunk[0])
        chunk = chunk[1:]
    trail = []
    while chunk:
        if chunk in ABBREVIATIONS:
            break
        if chunk[-1] in _TRAILERS and len(chunk) > 1:
            trail.append(chunk[-1])
            chunk = chunk[:-1]
        elif len(chunk) == 1 and chunk in _TRAILERS:
            trail.append(chunk)
            chunk = ""
        else:
            break
    if chunk:
        lead.append(chunk)
    lead.extend(reversed(trail))
    return lead


def tokenize(text: str) -> list:
    """Split raw text into sentences of word tokens.

    Total function: any input yields a (possibly empty) list of non-empty
    sentences.
    """
    sentences = []
    current = []
    for chunk in text.split():
        tokens = _split_chunk(chunk)
        current.extend(tokens)
        if tokens and tokens[-1] in TERMINALS:
            sentences.append(current)
            current = []
    if current:
        sentences.append(current)
    return sentences


# --- Annotated-markup parsing ----------------------------------------------

_TAG_RE = re.compile(
    r"<(?P<element>ENAMEX|TIMEX|NUMEX)\s+TYPE=\"(?P<type>[A-Z-]+)\"\s*>"
    r"|</(?P<close>ENAMEX|TIMEX|NUMEX)\s*>"
)
_ENTITY_RE = re.compile(r"&(amp|lt|gt);")
_ENTITY_MAP = {"&amp;": "&", "&lt;": "<", "&gt;": ">"}


def _position(text, offset):
    line = text.count("\n", 0, offset) + 1
    column = offset - (text.rfind("\n", 0, offset) + 1) + 1
    return line, column


def _unescape(text, raw, raw_offset):
    """Replace entities; reject bare markup characters."""
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "&":
            m = _ENTITY_RE.match(text, i)
            if not m:
                line, col = _position(raw, raw_offset + i)
                raise ParseError("bare '&' (use &amp;)", line, col)
            out.append(_ENTITY_MAP[m.group(0)])
            i = m.end()
        elif ch == ">":
            line, col = _position(raw, raw_offset + i)
            raise ParseError("bare '>' (use &gt;)", line, col)
        else:
            out.append(ch)
            i += 1
    return "".join(out)


class _SentenceBuilder:
    def __init__(self):
        self.sentences = []
        self.tokens = []
        self.regions = []
        self.open_class = None
        self.open_start = None

    def add_text(self, text):
        for chunk in text.split():
            toks = _split_chunk(chunk)
            self.tokens.extend(toks)
            # A break inside an open region would split it across sentences.
            if toks and toks[-1] in TERMINALS and self.open_class is None:
                self.flush()

    def open_region(self, name_class):
        self.open_class = name_class
        self.open_start = len(self.tokens)

    def close_region(self):
        region = Region(self.open_start, len(self.tokens), self.open_class)
        self.regions.append(region)
        self.open_class = None
        self.open_start = None

    def flush(self):
        if self.tokens:
            self.sentences.append(AnnotatedSentence(self.tokens, self.regions).validate())
        self.tokens = []
        self.regions = []


def parse_annotated(text: str) -> list:
    """Parse inline-markup annotated text into AnnotatedSentences."""
    builder = _SentenceBuilder()
    pos = 0
    while pos < len(text):
        lt = text.find("<", pos)
        if lt == -1:
            builder.add_text(_unescape(text[pos:], text, pos))
            break
        if lt > pos:
            builder.add_text(_unescape(text[pos:lt], text, pos))
        m = _TAG_RE.match(text, lt)
        line, col = _position(text, lt)
        if not m:
            raise ParseError("malformed tag", line, col)
        if m.group("close"):
            if builder.open_class is None:
                raise ParseError("closing tag without an open region", line, col)
            element = _ELEMENT_OF_CLASS[builder.open_class]
            if m.group("close") != element:
                raise ParseError("closing tag %s does not match open %s"
                                 % (m.group("close"), element), line, col)
            if builder.open_start == len(builder.tokens):
                raise ParseError("empty region", line, col)
            builder.close_region()
        else:
            if builder.open_class is not None:
                raise ParseError("nested tags are not allowed", line, col)
            name_class = m.group("type")
            element = m.group("element")
            if name_class not in _CLASSES_OF_ELEMENT[element]:
                raise ParseError("unknown TYPE %r for %s" % (name_class, element),
                                 line, col)
            builder.open_region(name_class)
        pos = m.end()
    if builder.open_class is not None:
        line, col = _position(text, len(text))
        raise ParseError("unclosed tag at end of document", line, col)
    builder.flush()
    return builder.sentences


def _escape(token):
    return token.replace("&", "&amp;").replace("<", "&lt;").replace(">", "&gt;")


def emit_annotated(sentences) -> str:
    """Render AnnotatedSentences back to inline-markup text, one per line."""
    lines = []
    for sentence in sentences:
        if not sentence.tokens:
            continue
        starts = {r.start: r for r in sentence.regions}
        ends = {r.end: r for r in sentence.regions}
        parts = []
        for i, token in enumerate(sentence.tokens):
            if i in ends:
                parts[-1] += "</%s>" % _ELEMENT_OF_CLASS[ends[i].name_class]
            if i in starts:
                region = starts[i]
                parts.append('<%s TYPE="%s">%s'
                             % (_ELEMENT_OF_CLASS[region.name_class],
                                region.name_class, _escape(token)))
            else:
                parts.append(_escape(token))
        if len(sentence.tokens) in ends:
            parts[-1] += "</%s>" % _ELEMENT_OF_CLASS[ends[len(sentence.tokens)].name_class]
        lines.append(" ".join(parts))
    return "\n".join(lines) + ("\n" if lines else "")


def split_corpus(sentences, fraction, seed: int):
    """Deterministically split sentences into two disjoint parts.

    Part A gets round(fraction * total) sentences (round half up), drawn by
    a seeded shuffle; the remainder forms part B.
    """
    sentences = list(sentences)
    if not sentences:
        raise ValueError("cannot split an empty corpus")
    if not 0 < fraction < 1:
        raise ValueError("fraction must be in (0, 1), got %r" % (fraction,))
    order = list(range(len(sentences)))
    random.Random(seed).shuffle(order)
    n_a = int(fraction * len(sentences) + 0.5)
    picked = sorted(order[:n_a])
    picked_set = set(picked)
    part_a = [sentences[i] for i in picked]
    part_b = [sentences[i] for i in range(len(sentences)) if i not in picked_set]
    return part_a, part_b
