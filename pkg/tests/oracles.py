"""Independent reference implementations used to cross-check the library.

The reduction enumerator here works by literally replaying every order
of adjacent-pair eliminations, with none of the first-cup recursion the
library uses; it is deliberately slow and only meant for short words.
"""

from __future__ import annotations

from itertools import product

import numpy as np

from discotrans.dictionary import DictionaryEntry
from discotrans.grammar import PregroupType, Reduction
from discotrans.lexicon import Phrase, lex_phrase
from discotrans.semantics import reduction_matrix
from discotrans.translation import translate_object


def reductions_by_elimination(
    source: PregroupType, target: PregroupType
) -> set[frozenset[tuple[int, int]]]:
    """Every cup set reaching ``target``, found by trying all elimination orders."""
    results: set[frozenset[tuple[int, int]]] = set()

    def step(alive: tuple[int, ...], cups: frozenset[tuple[int, int]]) -> None:
        if tuple(source.simples[i] for i in alive) == target.simples:
            results.add(cups)
        for k in range(len(alive) - 1):
            i, j = alive[k], alive[k + 1]
            a, b = source.simples[i], source.simples[j]
            if a.base == b.base and b.z == a.z + 1:
                step(alive[:k] + alive[k + 2 :], cups | {(i, j)})

    step(tuple(range(len(source))), frozenset())
    return results


def all_reductions(source: PregroupType) -> list[Reduction]:
    """Every reduction out of ``source``, to whatever target it reaches."""
    seen: set[frozenset[tuple[int, int]]] = set()
    found: list[Reduction] = []

    def step(alive: tuple[int, ...], cups: frozenset[tuple[int, int]]) -> None:
        if cups not in seen:
            seen.add(cups)
            found.append(Reduction.from_cups(source, cups))
        for k in range(len(alive) - 1):
            i, j = alive[k], alive[k + 1]
            a, b = source.simples[i], source.simples[j]
            if a.base == b.base and b.z == a.z + 1:
                step(alive[:k] + alive[k + 2 :], cups | {(i, j)})

    step(tuple(range(len(source))), frozenset())
    return found


def random_reduction(rng: np.random.Generator, source: PregroupType) -> Reduction:
    """A random valid reduction built by a random elimination walk."""
    alive = list(range(len(source)))
    cups: set[tuple[int, int]] = set()
    while True:
        candidates = []
        for k in range(len(alive) - 1):
            i, j = alive[k], alive[k + 1]
            a, b = source.simples[i], source.simples[j]
            if a.base == b.base and b.z == a.z + 1:
                candidates.append((i, j))
        if not candidates or rng.random() < 0.3:
            break
        i, j = candidates[rng.integers(len(candidates))]
        cups.add((i, j))
        alive.remove(i)
        alive.remove(j)
    return Reduction.from_cups(source, cups)


def random_orthogonal(rng: np.random.Generator, n: int) -> np.ndarray:
    """Haar-ish random orthogonal matrix from a sign-fixed QR factorization."""
    q, r = np.linalg.qr(rng.standard_normal((n, n)))
    return q * np.sign(np.diag(r))


def dictionary_by_brute_force(lex_a, lex_b, t, q) -> list[DictionaryEntry]:
    """Definition-level dictionary enumeration.

    Uses the elimination search and the explicit reduction matrices
    instead of the library's first-cup search and einsum contraction.
    """
    cache: dict = {}

    def reductions(source, target):
        key = (source.simples, target.simples)
        if key not in cache:
            cups = reductions_by_elimination(source, target)
            cache[key] = sorted(
                (Reduction.from_cups(source, c) for c in cups),
                key=lambda r: r.sorted_cups,
            )
        return cache[key]

    def phrases(lex, max_len):
        for length in range(1, max_len + 1):
            for words in product(lex.words, repeat=length):
                for senses in product(*(range(len(lex.senses(w))) for w in words)):
                    yield Phrase(tuple(words), tuple(senses))

    entries = []
    for tp in phrases(lex_b, q.max_target_len):
        t_obj = lex_phrase(lex_b, tp)
        t_type, t_flat = t_obj.type, t_obj.meaning.flat
        if q.target_type_filter is not None:
            onto = reductions(t_type, q.target_type_filter)
            if not onto:
                continue
            t_flat = reduction_matrix(lex_b.model, onto[0]) @ t_flat
            t_type = q.target_type_filter
        for sp in phrases(lex_a, q.max_source_len):
            image = translate_object(t, lex_phrase(lex_a, sp))
            for r in reductions(image.type, t_type):
                reduced = reduction_matrix(lex_b.model, r) @ image.meaning.flat
                d = float(np.linalg.norm(reduced - t_flat))
                if q.threshold is not None and d > q.threshold:
                    continue
                entries.append(DictionaryEntry(sp, tp, r, d))
    entries.sort(key=DictionaryEntry.sort_key)
    return entries
