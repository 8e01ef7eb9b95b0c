"""Readers and writers for the JSON document family.

Every document carries ``"format": 1``.  Tensor data is stored as a
flat row-major array; shapes are always rederived from the type and
the model.  Model references inside lexicon and translation files may
be inline documents or path strings resolved relative to the
containing file.
"""

from __future__ import annotations

import json
from pathlib import Path

import numpy as np

from .dictionary import DictionaryEntry
from .errors import FormatError
from .grammar import Reduction, parse_type
from .lexicon import Lexicon, Phrase
from .product_space import PSObject
from .semantics import LanguageModel, Tensor, make_tensor
from .translation import Translation

FORMAT_VERSION = 1


def round_sig(x: float, digits: int = 12) -> float:
    return float(f"{float(x):.{digits}g}")


def format_number(x: float, digits: int = 12) -> str:
    return f"{float(x):.{digits}g}"


def _check_format(doc, kind: str) -> dict:
    if not isinstance(doc, dict):
        raise FormatError(f"{kind} document must be a JSON object")
    if doc.get("format") != FORMAT_VERSION:
        raise FormatError(
            f"{kind} document must declare \"format\": {FORMAT_VERSION}, "
            f"got {doc.get('format')!r}"
        )
    return doc


def _require(doc: dict, key: str, kind: str):
    if key not in doc:
        raise FormatError(f"{kind} document is missing {key!r}")
    return doc[key]


# -- models -----------------------------------------------------------------

def model_from_doc(doc) -> LanguageModel:
    doc = _check_format(doc, "model")
    name = _require(doc, "name", "model")
    basic_types = _require(doc, "basic_types", "model")
    if not isinstance(basic_types, dict) or not all(
        isinstance(v, int) and v >= 1 for v in basic_types.values()
    ):
        raise FormatError("basic_types must map names to positive integers")
    return LanguageModel(str(name), dict(basic_types))


def model_to_doc(model: LanguageModel) -> dict:
    return {"format": FORMAT_VERSION, "name": model.name, "basic_types": dict(model.dims)}


def _resolve_model(ref, base_dir: Path, kind: str) -> LanguageModel:
    if isinstance(ref, str):
        return load_model(base_dir / ref)
    if isinstance(ref, dict):
        return model_from_doc(ref)
    raise FormatError(f"{kind}: model reference must be a path string or inline document")


# -- lexicons ---------------------------------------------------------------

def lexicon_from_doc(doc, base_dir: Path = Path(".")) -> Lexicon:
    doc = _check_format(doc, "lexicon")
    model = _resolve_model(_require(doc, "model", "lexicon"), base_dir, "lexicon")
    records = _require(doc, "words", "lexicon")
    entries: dict[str, list[PSObject]] = {}
    for record in records:
        word = str(_require(record, "word", "lexicon record"))
        g = parse_type(str(_require(record, "type", "lexicon record")), model.basics)
        data = _require(record, "data", "lexicon record")
        tensor = make_tensor(model, g, data)
        entries.setdefault(word, []).append(PSObject.of(tensor))
    return Lexicon(model, {w: tuple(objs) for w, objs in entries.items()})


def lexicon_to_doc(lex: Lexicon, model_ref=None) -> dict:
    records = [
        {
            "word": word,
            "type": str(obj.type),
            "data": [round_sig(x) for x in obj.meaning.flat],
        }
        for word in lex.words
        for obj in lex.entries[word]
    ]
    return {
        "format": FORMAT_VERSION,
        "model": model_ref if model_ref is not None else model_to_doc(lex.model),
        "words": records,
    }


# -- translations -----------------------------------------------------------

def translation_from_doc(doc, base_dir: Path = Path(".")) -> Translation:
    doc = _check_format(doc, "translation")
    source = _resolve_model(_require(doc, "source", "translation"), base_dir, "translation")
    target = _resolve_model(_require(doc, "target", "translation"), base_dir, "translation")
    j_doc = _require(doc, "j", "translation")
    alpha_doc = _require(doc, "alpha", "translation")
    j = {
        str(b): parse_type(str(image), target.basics) for b, image in j_doc.items()
    }
    alpha = {str(b): np.asarray(rows, dtype=float) for b, rows in alpha_doc.items()}
    return Translation(source, target, j, alpha)


def translation_to_doc(t: Translation) -> dict:
    return {
        "format": FORMAT_VERSION,
        "source": model_to_doc(t.source_model),
        "target": model_to_doc(t.target_model),
        "j": {b: str(g) for b, g in sorted(t.j.items())},
        "alpha": {
            b: [[round_sig(x) for x in row] for row in matrix]
            for b, matrix in sorted(t.alpha.items())
        },
    }


# -- tensors, matrices, pairs ------------------------------------------------

def tensor_to_doc(t: Tensor) -> dict:
    return {
        "format": FORMAT_VERSION,
        "type": str(t.type),
        "data": [round_sig(x) for x in t.flat],
    }


def tensor_from_doc(doc, model: LanguageModel) -> Tensor:
    doc = _check_format(doc, "tensor")
    g = parse_type(str(_require(doc, "type", "tensor")), model.basics)
    return make_tensor(model, g, _require(doc, "data", "tensor"))


def matrix_from_doc(doc) -> np.ndarray:
    doc = _check_format(doc, "matrix")
    matrix = np.asarray(_require(doc, "matrix", "matrix"), dtype=float)
    if matrix.ndim != 2:
        raise FormatError("matrix must be a list of equal-length rows")
    return matrix


def matrix_to_doc(matrix: np.ndarray) -> dict:
    return {
        "format": FORMAT_VERSION,
        "matrix": [[round_sig(x) for x in row] for row in np.asarray(matrix)],
    }


def pairs_from_doc(doc) -> list[tuple[list[float], list[float]]]:
    doc = _check_format(doc, "pairs")
    pairs = []
    for record in _require(doc, "pairs", "pairs"):
        pairs.append(
            (
                list(_require(record, "source", "pair record")),
                list(_require(record, "target", "pair record")),
            )
        )
    if not pairs:
        raise FormatError("pairs document holds no pairs")
    return pairs


# -- dictionaries -----------------------------------------------------------

def _phrase_to_doc(p: Phrase) -> dict:
    doc = {"words": list(p.words)}
    if p.sense_choice is not None:
        doc["senses"] = list(p.sense_choice)
    return doc


def _phrase_from_doc(doc) -> Phrase:
    words = tuple(_require(doc, "words", "phrase"))
    senses = tuple(doc["senses"]) if "senses" in doc else None
    return Phrase(words, senses)


def dictionary_to_doc(entries: list[DictionaryEntry]) -> dict:
    return {
        "format": FORMAT_VERSION,
        "entries": [
            {
                "source": _phrase_to_doc(e.source_phrase),
                "target": _phrase_to_doc(e.target_phrase),
                "reduction": {
                    "source": str(e.reduction.source),
                    "target": str(e.reduction.target),
                    "cups": [list(c) for c in e.reduction.sorted_cups],
                },
                "distance": round_sig(e.distance),
            }
            for e in entries
        ],
    }


def dictionary_from_doc(doc) -> list[DictionaryEntry]:
    doc = _check_format(doc, "dictionary")
    entries = []
    for record in _require(doc, "entries", "dictionary"):
        red_doc = _require(record, "reduction", "dictionary entry")
        reduction = Reduction.from_cups(
            parse_type(str(_require(red_doc, "source", "reduction"))),
            [tuple(c) for c in _require(red_doc, "cups", "reduction")],
        )
        entries.append(
            DictionaryEntry(
                _phrase_from_doc(_require(record, "source", "dictionary entry")),
                _phrase_from_doc(_require(record, "target", "dictionary entry")),
                reduction,
                float(_require(record, "distance", "dictionary entry")),
            )
        )
    return entries


def dictionary_to_rows(entries: list[DictionaryEntry]) -> str:
    """Tab-separated rows: phrase, phrase, reduction, distance."""
    lines = [
        "\t".join(
            [
                str(e.source_phrase),
                str(e.target_phrase),
                str(e.reduction),
                format_number(e.distance),
            ]
        )
        for e in entries
    ]
    return "\n".join(lines)


# -- path-level helpers -------------------------------------------------------

def _load_json(path) -> dict:
    path = Path(path)
    try:
        with open(path) as handle:
            return json.load(handle)
    except json.JSONDecodeError as exc:
        raise FormatError(f"{path} is not valid JSON: {exc}") from exc


def load_model(path) -> LanguageModel:
    return model_from_doc(_load_json(path))


def load_lexicon(path) -> Lexicon:
    return lexicon_from_doc(_load_json(path), Path(path).parent)


def load_translation(path) -> Translation:
    return translation_from_doc(_load_json(path), Path(path).parent)


def load_matrix(path) -> np.ndarray:
    return matrix_from_doc(_load_json(path))


def load_pairs(path) -> list[tuple[list[float], list[float]]]:
    return pairs_from_doc(_load_json(path))


def save_doc(doc: dict, path) -> None:
    with open(path, "w") as handle:
        json.dump(doc, handle, indent=2)
        handle.write("\n")
