"""Command-line front end.

Subcommands: parse, meaning, translate, check, procrustes, fit, dict.
Exit codes: 0 success, 1 negative result (no reduction, failed check,
empty dictionary), 2 input error, 3 numeric failure.  Structured output
goes to stdout as JSON documents that the loaders can read back;
numbers are printed with 12 significant digits.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field

import numpy as np

from . import io
from .dictionary import DictionaryQuery, build_dictionary
from .errors import (
    DiscotransError,
    ModelMismatchError,
    NoReductionError,
    RankDeficientError,
)
from .grammar import parse_type, reduce_search
from .lexicon import Lexicon, Phrase, phrase_meaning
from .semantics import LanguageModel, normalize_sentence
from .translation import (
    Translation,
    check_naturality,
    fit_alpha,
    nearest_unitary,
    translate_lexicon,
)

EXIT_OK = 0
EXIT_NEGATIVE = 1
EXIT_INPUT = 2
EXIT_NUMERIC = 3


@dataclass
class Workspace:
    """Artifacts loaded for one invocation, with cross-references checked.

    Two files mentioning the same model name must agree on its
    dimensions.
    """

    models: dict[str, LanguageModel] = field(default_factory=dict)
    lexicons: dict[str, Lexicon] = field(default_factory=dict)
    translations: dict[str, Translation] = field(default_factory=dict)

    def register_model(self, model: LanguageModel) -> LanguageModel:
        known = self.models.get(model.name)
        if known is not None and known != model:
            raise ModelMismatchError(
                f"model {model.name!r} is declared twice with different dimensions"
            )
        self.models[model.name] = model
        return model

    def load_lexicon(self, path: str) -> Lexicon:
        lex = io.load_lexicon(path)
        self.register_model(lex.model)
        self.lexicons[path] = lex
        return lex

    def load_translation(self, path: str) -> Translation:
        t = io.load_translation(path)
        self.register_model(t.source_model)
        self.register_model(t.target_model)
        self.translations[path] = t
        return t


def _print_doc(doc: dict) -> None:
    print(json.dumps(doc, indent=2))


def _phrase(args) -> Phrase:
    senses = None
    if getattr(args, "senses", None):
        senses = tuple(int(s) for s in args.senses.split(","))
    return Phrase(tuple(args.phrase.split()), senses)


def cmd_parse(args) -> int:
    basics = None
    if args.model:
        basics = io.load_model(args.model).basics
    source = parse_type(args.source_type, basics)
    target = parse_type(args.target_type, basics)
    found = reduce_search(source, target, args.max)
    if not found:
        print("no reduction")
        return EXIT_NEGATIVE
    for k, r in enumerate(found, start=1):
        survivors = ",".join(str(i) for i in r.survivors)
        print(f"reduction {k}: cups={r} survivors=[{survivors}]")
    return EXIT_OK


def _meaning_of(lex: Lexicon, args) -> int:
    target = parse_type(args.target_type, lex.model.basics)
    tensor = phrase_meaning(lex, _phrase(args), target)
    if args.normalize:
        tensor = normalize_sentence(lex.model, tensor)
    _print_doc(io.tensor_to_doc(tensor))
    return EXIT_OK


def cmd_meaning(args) -> int:
    ws = Workspace()
    return _meaning_of(ws.load_lexicon(args.lex), args)


def cmd_translate(args) -> int:
    ws = Workspace()
    lex = ws.load_lexicon(args.lex)
    t = ws.load_translation(args.translation)
    return _meaning_of(translate_lexicon(t, lex), args)


def cmd_check(args) -> int:
    ws = Workspace()
    t = ws.load_translation(args.translation)
    source = parse_type(args.source_type, t.source_model.basics)
    target = parse_type(args.target_type, t.source_model.basics)
    found = reduce_search(source, target, max_results=1)
    if not found:
        raise NoReductionError(f"no reduction from '{source}' to '{target}' to check")
    report = check_naturality(t, found[0], args.tolerance)
    _print_doc(
        {
            "format": io.FORMAT_VERSION,
            "max_residual": io.round_sig(report.max_residual),
            "tolerance": report.tolerance,
            "passed": report.passed,
            "basis_size": report.basis_size,
        }
    )
    return EXIT_OK if report.passed else EXIT_NEGATIVE


def cmd_procrustes(args) -> int:
    matrix = io.load_matrix(args.matrix)
    _print_doc(io.matrix_to_doc(nearest_unitary(matrix)))
    return EXIT_OK


def cmd_fit(args) -> int:
    pairs = io.load_pairs(args.pairs)
    _print_doc(io.matrix_to_doc(fit_alpha(pairs, unitary=args.unitary)))
    return EXIT_OK


def cmd_dict(args) -> int:
    ws = Workspace()
    lex_a = ws.load_lexicon(args.lex_a)
    lex_b = ws.load_lexicon(args.lex_b)
    t = ws.load_translation(args.translation)
    type_filter = None
    if args.target_type:
        type_filter = parse_type(args.target_type, lex_b.model.basics)
    elif args.reduced_only:
        type_filter = parse_type("s", lex_b.model.basics)
    query = DictionaryQuery(
        max_source_len=args.max_source_len,
        max_target_len=args.max_target_len,
        target_type_filter=type_filter,
        threshold=args.k,
        max_pairs=args.max_pairs,
    )
    entries = build_dictionary(lex_a, lex_b, t, query)
    if args.json:
        _print_doc(io.dictionary_to_doc(entries))
    elif entries:
        print(io.dictionary_to_rows(entries))
    return EXIT_OK if entries else EXIT_NEGATIVE


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="discotrans",
        description="Pregroup parsing, tensor meanings, translations and dictionaries.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("parse", help="search for type reductions")
    p.add_argument("--from", dest="source_type", required=True, metavar="TYPE")
    p.add_argument("--to", dest="target_type", required=True, metavar="TYPE")
    p.add_argument("--max", type=int, default=None, help="cap on reductions listed")
    p.add_argument("--model", help="model file whose basic types constrain parsing")
    p.set_defaults(func=cmd_parse)

    p = sub.add_parser("meaning", help="reduce a phrase's meaning onto a type")
    p.add_argument("--lex", required=True, help="lexicon file")
    p.add_argument("--phrase", required=True)
    p.add_argument("--to", dest="target_type", required=True, metavar="TYPE")
    p.add_argument("--senses", help="comma-separated per-word sense indices")
    p.add_argument("--normalize", action="store_true",
                   help="collapse a nonzero sentence value to 1")
    p.set_defaults(func=cmd_meaning)

    p = sub.add_parser("translate", help="translate a phrase, then compute its meaning")
    p.add_argument("--translation", required=True, help="translation file")
    p.add_argument("--lex", required=True, help="source-side lexicon file")
    p.add_argument("--phrase", required=True)
    p.add_argument("--to", dest="target_type", required=True,
                   metavar="TYPE", help="target type in the target grammar")
    p.add_argument("--senses", help="comma-separated per-word sense indices")
    p.add_argument("--normalize", action="store_true")
    p.set_defaults(func=cmd_translate)

    p = sub.add_parser("check", help="verify a translation commutes with a reduction")
    p.add_argument("--translation", required=True)
    p.add_argument("--from", dest="source_type", required=True, metavar="TYPE")
    p.add_argument("--to", dest="target_type", required=True, metavar="TYPE")
    p.add_argument("--tolerance", type=float, default=1e-9)
    p.set_defaults(func=cmd_check)

    p = sub.add_parser("procrustes", help="nearest orthogonal matrix")
    p.add_argument("--matrix", required=True, help="matrix file")
    p.set_defaults(func=cmd_procrustes)

    p = sub.add_parser("fit", help="least-squares matrix from vector pairs")
    p.add_argument("--pairs", required=True, help="pairs file")
    p.add_argument("--unitary", action="store_true",
                   help="project the fit to its nearest orthogonal matrix")
    p.set_defaults(func=cmd_fit)

    p = sub.add_parser("dict", help="build a phrase dictionary over a translation")
    p.add_argument("--lex-a", required=True, help="source lexicon file")
    p.add_argument("--lex-b", required=True, help="target lexicon file")
    p.add_argument("--translation", required=True)
    p.add_argument("--k", type=float, default=None, help="distance threshold")
    p.add_argument("--max-source-len", type=int, default=1)
    p.add_argument("--max-target-len", type=int, default=1)
    p.add_argument("--to", dest="target_type", default=None, metavar="TYPE",
                   help="reduce both sides onto this type first")
    p.add_argument("--reduced-only", action="store_true",
                   help="shorthand for --to s")
    p.add_argument("--max-pairs", type=int, default=100_000)
    p.add_argument("--json", action="store_true",
                   help="emit the structured document instead of rows")
    p.set_defaults(func=cmd_dict)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except NoReductionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NEGATIVE
    except (RankDeficientError, np.linalg.LinAlgError) as exc:
        print(f"numeric error: {exc}", file=sys.stderr)
        return EXIT_NUMERIC
    except (DiscotransError, OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT


if __name__ == "__main__":
    sys.exit(main())
