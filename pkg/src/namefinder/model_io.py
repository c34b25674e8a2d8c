"""Line-oriented model file format.

Layout: a fixed header (magic+version, feature config, class inventory,
vocabulary size), a [vocabulary] section of word<TAB>id rows in id
order, then one section per count table, main tables before unknown
tables, each row `event<TAB>context<TAB>count`.  Event and context
components are space-joined, with backslash escapes for characters that
would collide with the framing (space, tab, newline, backslash).  Rows
within a section are sorted, so serialization is deterministic and
write→read→write is byte-identical.
"""

from .counts import CondTable, CountTables, TrainedModel, Vocabulary
from .corpus import INTERNAL_CLASSES
from .features import FeatureConfig, Token

MAGIC = "namefinder-model"
VERSION = 1

# How to decode each table's event field; contexts are always plain tuples.
_TOKEN_EVENTS = {"first_words", "begin_bigrams", "word_bigrams", "word_unigrams"}


class ModelFormatError(ValueError):
    """Raised for syntactically or semantically invalid model files."""


_ESCAPES = (("\\", "\\\\"), (" ", "\\s"), ("\t", "\\t"), ("\n", "\\n"))
_UNESCAPES = {"\\": "\\", "s": " ", "t": "\t", "n": "\n"}


def _escape(component: str) -> str:
    for char, replacement in _ESCAPES:
        component = component.replace(char, replacement)
    return component


def _unescape(text: str) -> str:
    out = []
    i = 0
    while i < len(text):
        ch = text[i]
        if ch == "\\":
            if i + 1 >= len(text) or text[i + 1] not in _UNESCAPES:
                raise ModelFormatError("bad escape in %r" % (text,))
            out.append(_UNESCAPES[text[i + 1]])
            i += 2
        else:
            out.append(ch)
            i += 1
    return "".join(out)


def _encode(value) -> str:
    components = value if isinstance(value, tuple) else (value,)
    return " ".join(_escape(c) for c in components)


def _decode(text: str) -> tuple:
    if text == "":
        return ()
    return tuple(_unescape(c) for c in text.split(" "))


def _table_lines(table: CondTable) -> list:
    lines = ["%s\t%s\t%d" % (_encode(event), _encode(context), count)
             for context, event, count in table.items()]
    lines.sort()
    return lines


def serialize_model(model: TrainedModel) -> str:
    lines = [
        "%s %d" % (MAGIC, VERSION),
        "swap_comma_period %d" % int(model.feature_config.swap_comma_period),
        "classes %s" % " ".join(model.classes),
        "vocab_size %d" % len(model.vocabulary),
        "[vocabulary]",
    ]
    for word in model.vocabulary.words():
        lines.append("%s\t%d" % (_escape(word), model.vocabulary.id_of(word)))
    for prefix, tables in (("main", model.main), ("unknown", model.unknown)):
        for name in CountTables.NAMES:
            lines.append("[%s.%s]" % (prefix, name))
            lines.extend(_table_lines(getattr(tables, name)))
    return "\n".join(lines) + "\n"


def _expect(lines, index, prefix):
    if index >= len(lines) or not lines[index].startswith(prefix + " "):
        found = lines[index] if index < len(lines) else "<end of file>"
        raise ModelFormatError("expected '%s ...' at line %d, found %r"
                               % (prefix, index + 1, found))
    return lines[index][len(prefix) + 1:]


def deserialize_model(text: str) -> TrainedModel:
    lines = text.splitlines()
    if not lines:
        raise ModelFormatError("empty model file")
    magic = lines[0].split(" ")
    if len(magic) != 2 or magic[0] != MAGIC:
        raise ModelFormatError("not a model file (bad magic line %r)" % (lines[0],))
    if magic[1] != str(VERSION):
        raise ModelFormatError("unsupported model version: expected %d, found %s"
                               % (VERSION, magic[1]))
    swap = _expect(lines, 1, "swap_comma_period")
    if swap not in ("0", "1"):
        raise ModelFormatError("swap_comma_period must be 0 or 1, found %r" % (swap,))
    config = FeatureConfig(swap_comma_period=(swap == "1"))
    classes = tuple(_expect(lines, 2, "classes").split(" "))
    if classes != INTERNAL_CLASSES:
        raise ModelFormatError("unexpected class inventory %r" % (classes,))
    try:
        vocab_size = int(_expect(lines, 3, "vocab_size"))
    except ValueError:
        raise ModelFormatError("vocab_size is not an integer") from None

    index = 4
    if index >= len(lines) or lines[index] != "[vocabulary]":
        raise ModelFormatError("expected [vocabulary] at line %d" % (index + 1,))
    index += 1
    vocabulary = Vocabulary()
    while index < len(lines) and not lines[index].startswith("["):
        parts = lines[index].split("\t")
        if len(parts) != 2:
            raise ModelFormatError("bad vocabulary row at line %d" % (index + 1,))
        word = _unescape(parts[0])
        if vocabulary.add(word) != int(parts[1]):
            raise ModelFormatError("non-contiguous vocabulary id at line %d"
                                   % (index + 1,))
        index += 1
    if len(vocabulary) != vocab_size:
        raise ModelFormatError("vocab_size %d does not match %d vocabulary rows"
                               % (vocab_size, len(vocabulary)))
    vocabulary.freeze()

    main, unknown = CountTables(), CountTables()
    for prefix, tables in (("main", main), ("unknown", unknown)):
        for name in CountTables.NAMES:
            header = "[%s.%s]" % (prefix, name)
            if index >= len(lines) or lines[index] != header:
                found = lines[index] if index < len(lines) else "<end of file>"
                raise ModelFormatError("expected section %s at line %d, found %r"
                                       % (header, index + 1, found))
            index += 1
            table = getattr(tables, name)
            token_events = name in _TOKEN_EVENTS
            while index < len(lines) and not lines[index].startswith("["):
                parts = lines[index].split("\t")
                if len(parts) != 3:
                    raise ModelFormatError("bad count row at line %d" % (index + 1,))
                event = _decode(parts[0])
                context = _decode(parts[1])
                try:
                    count = int(parts[2])
                except ValueError:
                    raise ModelFormatError("bad count at line %d" % (index + 1,)) from None
                if count <= 0:
                    raise ModelFormatError("non-positive count at line %d" % (index + 1,))
                if token_events:
                    if len(event) != 2:
                        raise ModelFormatError("expected <word feature> event at line %d"
                                               % (index + 1,))
                    table.add(context, Token(*event), count)
                else:
                    if len(event) != 1:
                        raise ModelFormatError("expected single-component event at line %d"
                                               % (index + 1,))
                    table.add(context, event[0], count)
                index += 1
    if index != len(lines):
        raise ModelFormatError("trailing content at line %d" % (index + 1,))
    return TrainedModel(vocabulary, main, unknown, config)


def write_model(model: TrainedModel, path):
    with open(path, "w", encoding="utf-8") as handle:
        handle.write(serialize_model(model))


def read_model(path) -> TrainedModel:
    with open(path, encoding="utf-8") as handle:
        return deserialize_model(handle.read())
