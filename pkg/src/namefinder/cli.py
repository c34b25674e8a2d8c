"""Command-line surface: train, decode, score, learning-curve.

Exit codes: 0 success, 1 usage, 2 parse or format problem (corpus,
model file, alignment, unusable corpus), 3 I/O failure.
"""

import argparse
import sys
import time
from dataclasses import dataclass, field
from fractions import Fraction

from .corpus import NAME_CLASSES, ParseError, emit_annotated, parse_annotated
from .counts import TrainingError, train
from .decoder import Decoder
from .features import FeatureConfig
from .model_io import ModelFormatError, read_model, write_model
from .scorer import AlignmentError, format_report, score

EXIT_OK = 0
EXIT_USAGE = 1
EXIT_FORMAT = 2
EXIT_IO = 3

DEFAULT_FRACTIONS = (Fraction(1), Fraction(1, 2), Fraction(1, 4), Fraction(1, 8))


@dataclass
class RunConfig:
    """Shared experiment settings; curve_fractions sorted descending in (0, 1]."""

    feature_config: FeatureConfig = field(default_factory=FeatureConfig)
    beta: float = 1.0
    seed: int = 0
    curve_fractions: tuple = DEFAULT_FRACTIONS


def _fail(code, message):
    print("namefinder: %s" % message, file=sys.stderr)
    return code


def _read_text(path):
    with open(path, encoding="utf-8") as handle:
        return handle.read()


def cmd_train(corpus_path, model_path, config: RunConfig) -> int:
    try:
        text = _read_text(corpus_path)
    except OSError as exc:
        return _fail(EXIT_IO, "cannot read corpus: %s" % exc)
    try:
        sentences = parse_annotated(text)
    except ParseError as exc:
        return _fail(EXIT_FORMAT, "corpus parse failed: %s" % exc)
    try:
        model = train(sentences, config.feature_config)
    except TrainingError as exc:
        return _fail(EXIT_FORMAT, str(exc))
    try:
        write_model(model, model_path)
    except OSError as exc:
        return _fail(EXIT_IO, "cannot write model: %s" % exc)
    print("vocabulary size: %d" % len(model.vocabulary))
    print("total words: %d" % sum(len(s.tokens) for s in sentences))
    for nc in NAME_CLASSES:
        count = sum(1 for s in sentences for r in s.regions if r.name_class == nc)
        print("%s regions: %d" % (nc, count))
    return EXIT_OK


def cmd_decode(model_path, input_path, output_path=None) -> int:
    try:
        model = read_model(model_path)
    except ModelFormatError as exc:
        return _fail(EXIT_FORMAT, "bad model file: %s" % exc)
    except OSError as exc:
        return _fail(EXIT_IO, "cannot read model: %s" % exc)
    try:
        text = _read_text(input_path)
    except OSError as exc:
        return _fail(EXIT_IO, "cannot read input: %s" % exc)
    started = time.perf_counter()
    results = Decoder(model).decode_document(text)
    elapsed = max(time.perf_counter() - started, 1e-9)
    output = emit_annotated([r.sentence for r in results])
    if output_path is None:
        sys.stdout.write(output)
    else:
        try:
            with open(output_path, "w", encoding="utf-8") as handle:
                handle.write(output)
        except OSError as exc:
            return _fail(EXIT_IO, "cannot write output: %s" % exc)
    megabytes = len(text.encode("utf-8")) / 1e6
    print("throughput: %.1f MB/hr" % (megabytes / (elapsed / 3600.0)),
          file=sys.stderr)
    return EXIT_OK


def cmd_score(key_path, response_path, beta: float = 1.0) -> int:
    try:
        key = parse_annotated(_read_text(key_path))
        response = parse_annotated(_read_text(response_path))
    except ParseError as exc:
        return _fail(EXIT_FORMAT, "parse failed: %s" % exc)
    except OSError as exc:
        return _fail(EXIT_IO, "cannot read file: %s" % exc)
    try:
        report = score(key, response, beta)
    except AlignmentError as exc:
        return _fail(EXIT_FORMAT, "key/response mismatch: %s" % exc)
    print(format_report(report))
    return EXIT_OK


def cmd_learning_curve(corpus_path, test_path, config: RunConfig) -> int:
    try:
        training = parse_annotated(_read_text(corpus_path))
        test = parse_annotated(_read_text(test_path))
    except ParseError as exc:
        return _fail(EXIT_FORMAT, "parse failed: %s" % exc)
    except OSError as exc:
        return _fail(EXIT_IO, "cannot read file: %s" % exc)
    print("fraction words F")
    for fraction in config.curve_fractions:
        k = int(fraction * len(training) + Fraction(1, 2))
        prefix = training[:k]
        try:
            model = train(prefix, config.feature_config)
            decoder = Decoder(model)
            response = [decoder.decode_sentence(s.tokens).sentence for s in test]
            report = score(test, response, config.beta)
        except (TrainingError, AlignmentError, ValueError) as exc:
            return _fail(EXIT_FORMAT, "fraction %s failed: %s" % (fraction, exc))
        words = sum(len(s.tokens) for s in prefix)
        print("%s %d %.4f" % (fraction, words, report.overall.f_measure))
    return EXIT_OK


class _Parser(argparse.ArgumentParser):
    """argparse exits 2 on usage errors; this surface reserves 2 for
    format problems, so remap usage errors to exit 1."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, "%s: error: %s\n" % (self.prog, message))


def _parse_fractions(parser, text):
    try:
        fractions = [Fraction(part) for part in text.split(",")]
    except (ValueError, ZeroDivisionError):
        parser.error("cannot parse fractions: %r" % text)
    for fraction in fractions:
        if not 0 < fraction <= 1:
            parser.error("fractions must be in (0, 1], got %s" % fraction)
    return tuple(sorted(fractions, reverse=True))


def _build_parser():
    parser = _Parser(prog="namefinder",
                     description="Trainable statistical name-finder.")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("train", help="train a model on an annotated corpus")
    p.add_argument("corpus")
    p.add_argument("--model", required=True, help="model file to write")
    p.add_argument("--spanish-numbers", action="store_true",
                   help="treat comma as the decimal separator")

    p = sub.add_parser("decode", help="annotate plain text with a trained model")
    p.add_argument("input")
    p.add_argument("--model", required=True, help="model file to read")
    p.add_argument("--output", help="annotated output file (default stdout)")

    p = sub.add_parser("score", help="score a response file against a key file")
    p.add_argument("key")
    p.add_argument("response")
    p.add_argument("--beta", type=float, default=1.0,
                   help="recall weight in the F-measure (default 1)")

    p = sub.add_parser("learning-curve",
                       help="train on shrinking fractions and score each")
    p.add_argument("corpus")
    p.add_argument("test")
    p.add_argument("--fractions", default="1,1/2,1/4,1/8",
                   help="comma-separated training fractions")
    p.add_argument("--beta", type=float, default=1.0)
    p.add_argument("--seed", type=int, default=0,
                   help="reserved for random subset sampling")
    p.add_argument("--spanish-numbers", action="store_true")
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if getattr(args, "beta", 1.0) <= 0:
        parser.error("--beta must be positive")
    feature_config = FeatureConfig(
        swap_comma_period=getattr(args, "spanish_numbers", False))
    if args.command == "train":
        return cmd_train(args.corpus, args.model,
                         RunConfig(feature_config=feature_config))
    if args.command == "decode":
        return cmd_decode(args.model, args.input, args.output)
    if args.command == "score":
        return cmd_score(args.key, args.response, args.beta)
    config = RunConfig(feature_config=feature_config, beta=args.beta,
                       seed=args.seed,
                       curve_fractions=_parse_fractions(parser, args.fractions))
    return cmd_learning_curve(args.corpus, args.test, config)


if __name__ == "__main__":
    sys.exit(main())
