"""Translations between language models.

A translation is a grammar map ``j`` (basic type to target word, pushed
through products and adjoints monoidally) together with one matrix per
basic type sending its meaning space into the space of its image type.
The module covers applying translations to objects, morphisms and whole
lexicons, composing them, verifying that a translation commutes with a
reduction, projecting a matrix to its nearest orthogonal one, and
fitting a matrix from example vector pairs.
"""

from __future__ import annotations

import math
import warnings
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

import numpy as np

from .errors import (
    InvalidReductionError,
    ModelMismatchError,
    NonFunctorialTranslationError,
    RankDeficientError,
    TypeMismatchError,
    UnknownBasicTypeError,
)
from .grammar import PregroupType, Reduction, SimpleType
from .lexicon import Lexicon
from .product_space import PSMorphism, PSObject, frobenius_distance
from .semantics import LanguageModel, _contract, make_tensor, space_shape


@dataclass(frozen=True)
class Translation:
    """A grammar map plus per-basic-type meaning matrices.

    ``alpha[b]`` maps the source space of ``b`` (columns) into the
    flattened target space of ``j[b]`` (rows).
    """

    source_model: LanguageModel
    target_model: LanguageModel
    j: Mapping[str, PregroupType]
    alpha: Mapping[str, np.ndarray]

    def __post_init__(self) -> None:
        frozen_j = dict(self.j)
        frozen_alpha = {}
        for base in self.source_model.basics:
            if base not in frozen_j:
                raise UnknownBasicTypeError(
                    f"grammar map does not cover basic type {base!r}"
                )
            rows = math.prod(space_shape(self.target_model, frozen_j[base]))
            cols = self.source_model.dim(base)
            matrix = np.asarray(self.alpha[base], dtype=float)
            if matrix.shape != (rows, cols):
                raise TypeMismatchError(
                    f"alpha[{base!r}] has shape {matrix.shape}, expected ({rows}, {cols})"
                )
            matrix = matrix.copy()
            matrix.flags.writeable = False
            frozen_alpha[base] = matrix
        object.__setattr__(self, "j", frozen_j)
        object.__setattr__(self, "alpha", frozen_alpha)


def identity_translation(model: LanguageModel) -> Translation:
    j = {b: PregroupType((SimpleType(b),)) for b in model.dims}
    alpha = {b: np.eye(d) for b, d in model.dims.items()}
    return Translation(model, model, j, alpha)


def j_apply(t: Translation, g: PregroupType) -> PregroupType:
    """Image of a type: per-simple images with adjoints pushed through."""
    simples: list[SimpleType] = []
    for s in g.simples:
        if s.base not in t.j:
            raise UnknownBasicTypeError(f"grammar map does not cover {s.base!r}")
        simples.extend(t.j[s.base].adjoint(s.z).simples)
    return PregroupType(tuple(simples))


def alpha_component(t: Translation, g: PregroupType) -> np.ndarray:
    """Component matrix at a product type: Kronecker product of the
    per-simple matrices.

    Adjoint simple types reuse the base matrix; an odd adjoint exponent
    reverses the image word, so the matrix rows are reordered by the
    matching axis reversal (a no-op for single-simple images).
    """
    matrix = np.eye(1)
    for s in g.simples:
        if s.base not in t.alpha:
            raise UnknownBasicTypeError(f"no meaning matrix for {s.base!r}")
        component = t.alpha[s.base]
        if s.z % 2:
            shape = space_shape(t.target_model, t.j[s.base])
            if len(shape) > 1:
                perm = np.arange(math.prod(shape)).reshape(shape)
                component = component[perm.transpose().ravel()]
        matrix = np.kron(matrix, component)
    return matrix


def translate_object(t: Translation, o: PSObject) -> PSObject:
    flat = alpha_component(t, o.type) @ o.meaning.flat
    image_type = j_apply(t, o.type)
    return PSObject.of(make_tensor(t.target_model, image_type, flat))


def translate_reduction(t: Translation, r: Reduction) -> Reduction:
    """Image of a reduction: each cup becomes a nest of cups pairing the
    two image blocks inside out."""
    lengths = [len(t.j[s.base]) for s in r.source.simples]
    offsets = [0]
    for length in lengths:
        offsets.append(offsets[-1] + length)
    cups = set()
    for a, b in r.cups:
        block = lengths[a]
        for k in range(block):
            cups.add((offsets[a] + k, offsets[b] + block - 1 - k))
    image_source = j_apply(t, r.source)
    try:
        image = Reduction.from_cups(image_source, cups)
    except InvalidReductionError as exc:
        raise NonFunctorialTranslationError(
            f"image of reduction '{r.source}' -> '{r.target}' is not a valid reduction: {exc}"
        ) from exc
    if image.target != j_apply(t, r.target):
        raise NonFunctorialTranslationError(
            f"image reduction lands in '{image.target}' instead of '{j_apply(t, r.target)}'"
        )
    return image


def translate_morphism(
    t: Translation, m: PSMorphism, source: PSObject, target: PSObject
) -> PSMorphism:
    """Image arrow; its distance label is recomputed between the
    translated-and-reduced source and the translated target."""
    if m.reduction.source != source.type or m.reduction.target != target.type:
        raise TypeMismatchError(
            f"morphism endpoints '{source.type}' -> '{target.type}' do not match its reduction"
        )
    image = translate_reduction(t, m.reduction)
    new_source = translate_object(t, source)
    new_target = translate_object(t, target)
    reduced = _contract(image, new_source.meaning.array)
    return PSMorphism(image, frobenius_distance(reduced, new_target.meaning.array))


def translate_lexicon(t: Translation, lex: Lexicon) -> Lexicon:
    """Push a whole lexicon through a translation, dropping senses whose
    images coincide."""
    if lex.model != t.source_model:
        raise ModelMismatchError(
            f"lexicon uses model {lex.model.name!r}, translation starts at "
            f"{t.source_model.name!r}"
        )
    entries = {}
    for word, senses in lex.entries.items():
        images = []
        for obj in senses:
            image = translate_object(t, obj)
            if not any(
                image.type == seen.type and image.meaning == seen.meaning
                for seen in images
            ):
                images.append(image)
        entries[word] = tuple(images)
    return Lexicon(t.target_model, entries)


def compose_translations(t2: Translation, t1: Translation) -> Translation:
    """Pointwise composite: grammar maps compose, matrices chain."""
    if t1.target_model != t2.source_model:
        raise ModelMismatchError(
            f"cannot compose: first translation lands in {t1.target_model.name!r}, "
            f"second starts at {t2.source_model.name!r}"
        )
    j = {b: j_apply(t2, t1.j[b]) for b in t1.j}
    alpha = {b: alpha_component(t2, t1.j[b]) @ t1.alpha[b] for b in t1.alpha}
    return Translation(t1.source_model, t2.target_model, j, alpha)


@dataclass(frozen=True)
class NaturalityReport:
    max_residual: float
    passed: bool
    tolerance: float
    basis_size: int


def check_naturality(
    t: Translation, r: Reduction, tolerance: float = 1e-9
) -> NaturalityReport:
    """Verify that translating commutes with reducing along ``r``.

    Both paths (reduce-then-translate and translate-then-reduce) are
    linear, so probing every standard basis vector of the source space
    is exhaustive; the report carries the worst per-vector Euclidean
    mismatch.
    """
    image = translate_reduction(t, r)
    src_shape = space_shape(t.source_model, r.source)
    size = math.prod(src_shape)
    alpha_src = alpha_component(t, r.source)
    alpha_tgt = alpha_component(t, r.target)
    basis = np.eye(size).reshape(*src_shape, size)
    reduced_first = alpha_tgt @ _contract(r, basis).reshape(-1, size)
    image_shape = space_shape(t.target_model, image.source)
    translated_first = _contract(
        image, alpha_src.reshape(*image_shape, size)
    ).reshape(-1, size)
    residuals = np.linalg.norm(reduced_first - translated_first, axis=0)
    max_residual = float(residuals.max()) if residuals.size else 0.0
    return NaturalityReport(max_residual, max_residual <= tolerance, tolerance, size)


def nearest_unitary(matrix: np.ndarray) -> np.ndarray:
    """Orthogonal matrix closest in Frobenius norm to ``matrix``.

    Parameters
    ----------
    matrix : (n, n) array_like
        Square full-rank matrix.

    Returns
    -------
    (n, n) ndarray
        The orthogonal polar factor U Vt of the singular value
        decomposition of ``matrix``.

    Raises
    ------
    RankDeficientError
        If ``matrix`` is singular; the minimizer is then not unique.
    """
    matrix = np.asarray(matrix, dtype=float)
    if matrix.ndim != 2 or matrix.shape[0] != matrix.shape[1] or matrix.shape[0] == 0:
        raise ValueError(f"expected a non-empty square matrix, got shape {matrix.shape}")
    u, s, vt = np.linalg.svd(matrix)
    cutoff = s[0] * max(matrix.shape) * np.finfo(float).eps
    if s[-1] <= cutoff:
        raise RankDeficientError(
            "matrix is rank deficient: every orthogonal completion of the "
            "deficient directions is equally close, so the projection is not unique"
        )
    return u @ vt


def fit_alpha(
    pairs: Sequence[tuple[Sequence[float], Sequence[float]]], unitary: bool = False
) -> np.ndarray:
    """Least-squares matrix sending each source vector near its target.

    Parameters
    ----------
    pairs : sequence of (source, target) vector pairs
    unitary : bool
        When set (square case only), replace the fit with its nearest
        orthogonal matrix.

    Returns
    -------
    (d_out, d_in) ndarray minimizing the summed squared residuals; for
    underdetermined systems the minimal-norm solution, with a warning.
    """
    if not pairs:
        raise ValueError("at least one pair is required")
    sources = np.asarray([p[0] for p in pairs], dtype=float)
    targets = np.asarray([p[1] for p in pairs], dtype=float)
    if sources.ndim != 2 or targets.ndim != 2:
        raise TypeMismatchError("pairs must hold constant-dimension vectors")
    solution, _, rank, _ = np.linalg.lstsq(sources, targets, rcond=None)
    if rank < sources.shape[1]:
        warnings.warn(
            "fit is underdetermined; returning the minimal-norm solution",
            stacklevel=2,
        )
    matrix = solution.T
    if unitary:
        if matrix.shape[0] != matrix.shape[1]:
            raise ValueError(
                f"cannot orthogonalize a {matrix.shape[0]}x{matrix.shape[1]} fit"
            )
        matrix = nearest_unitary(matrix)
    return matrix


def solve_generator_map(
    constraints: Iterable[tuple[PregroupType, PregroupType]]
) -> dict[str, PregroupType]:
    """Solve for per-generator images from whole-type requirements.

    Each constraint demands that the image of a source type equal a
    given target word.  Because the map must be single valued on
    generators and push through products, conflicting requirements (for
    example sending adjective-noun order to noun-adjective order while
    keeping adjectives mapped to adjectives) have no solution and raise
    ``NonFunctorialTranslationError``.
    """
    images: dict[str, PregroupType] = {}
    pending = [(g, h) for g, h in constraints]
    while pending:
        progressed = False
        deferred = []
        for g, h in pending:
            state = _apply_constraint(g, h, images)
            if state == "solved":
                progressed = True
            else:
                deferred.append((g, h))
        pending = deferred
        if pending and not progressed:
            unknowns = sorted(
                {s.base for g, _ in pending for s in g.simples if s.base not in images}
            )
            raise ValueError(
                f"constraints leave generators {unknowns} underdetermined"
            )
    return images


def _apply_constraint(
    g: PregroupType, h: PregroupType, images: dict[str, PregroupType]
) -> str:
    remaining = list(g.simples)
    target = list(h.simples)

    def strip(simple: SimpleType, from_left: bool) -> None:
        piece = images[simple.base].adjoint(simple.z).simples
        take = target[: len(piece)] if from_left else target[len(target) - len(piece) :]
        if tuple(take) != piece:
            raise NonFunctorialTranslationError(
                f"a single-valued grammar map cannot send '{g}' to '{h}': "
                f"the image of {simple} is fixed to '{images[simple.base].adjoint(simple.z)}' "
                f"but '{h}' requires '{PregroupType(tuple(take))}' there"
            )
        if from_left:
            del target[: len(piece)]
        else:
            del target[len(target) - len(piece) :]

    while remaining and remaining[0].base in images:
        strip(remaining.pop(0), from_left=True)
    while remaining and remaining[-1].base in images:
        strip(remaining.pop(), from_left=False)
    if not remaining:
        if target:
            raise NonFunctorialTranslationError(
                f"images of '{g}' leave '{PregroupType(tuple(target))}' of '{h}' unaccounted for"
            )
        return "solved"
    if len(remaining) == 1:
        simple = remaining[0]
        images[simple.base] = PregroupType(tuple(target)).adjoint(-simple.z)
        return "solved"
    return "stuck"
