"""Product-space view of a language model: typed vectors and labelled reductions.

Objects pair a pregroup type with a tensor living in its space; a
morphism pairs a reduction with the Euclidean (Frobenius) distance
between the reduced source tensor and the target tensor.  Between any
two tensors there is exactly one such arrow, so composite labels are
recomputed from the outer endpoints rather than accumulated.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .errors import TypeMismatchError
from .grammar import PregroupType, Reduction, compose_reductions, tensor_reductions
from .semantics import LanguageModel, Tensor, _contract, apply_reduction, tensor_product


@dataclass(frozen=True)
class PSObject:
    """A (type, meaning) pair."""

    type: PregroupType
    meaning: Tensor

    def __post_init__(self) -> None:
        if self.meaning.type != self.type:
            raise TypeMismatchError(
                f"meaning tensor has type '{self.meaning.type}', object declares '{self.type}'"
            )

    @classmethod
    def of(cls, meaning: Tensor) -> PSObject:
        return cls(meaning.type, meaning)


@dataclass(frozen=True)
class PSMorphism:
    """A reduction together with its distance label."""

    reduction: Reduction
    distance: float

    def __post_init__(self) -> None:
        if self.distance < 0:
            raise ValueError(f"distance must be non-negative, got {self.distance}")


def frobenius_distance(u: np.ndarray, v: np.ndarray) -> float:
    return float(np.linalg.norm(np.asarray(u).reshape(-1) - np.asarray(v).reshape(-1)))


def ps_morphism(
    model: LanguageModel, source: PSObject, r: Reduction, target: PSObject
) -> PSMorphism:
    """The unique arrow along r: its label measures how far the reduced
    source meaning lands from the target meaning."""
    if source.type != r.source:
        raise TypeMismatchError(f"source object has type '{source.type}', reduction starts at '{r.source}'")
    if target.type != r.target:
        raise TypeMismatchError(f"target object has type '{target.type}', reduction ends at '{r.target}'")
    image = apply_reduction(model, r, source.meaning)
    return PSMorphism(r, frobenius_distance(image.array, target.meaning.array))


def ps_compose(
    m2: PSMorphism, m1: PSMorphism, first: PSObject, middle: PSObject, last: PSObject
) -> PSMorphism:
    """Composite arrow; the label is recomputed between the outer endpoints."""
    _check_endpoints(m1, first, middle)
    _check_endpoints(m2, middle, last)
    composite = compose_reductions(m2.reduction, m1.reduction)
    image = _contract(composite, first.meaning.array)
    return PSMorphism(composite, frobenius_distance(image, last.meaning.array))


def ps_tensor(a: PSObject, b: PSObject) -> PSObject:
    """Monoidal product: concatenate types, outer-multiply meanings."""
    return PSObject.of(tensor_product(a.meaning, b.meaning))


def ps_tensor_morphism(
    m1: PSMorphism,
    m2: PSMorphism,
    source1: PSObject,
    source2: PSObject,
    target1: PSObject,
    target2: PSObject,
) -> PSMorphism:
    """Side-by-side product of arrows, label recomputed on the product endpoints."""
    _check_endpoints(m1, source1, target1)
    _check_endpoints(m2, source2, target2)
    product = tensor_reductions(m1.reduction, m2.reduction)
    source = ps_tensor(source1, source2)
    target = ps_tensor(target1, target2)
    image = _contract(product, source.meaning.array)
    return PSMorphism(product, frobenius_distance(image, target.meaning.array))


def _check_endpoints(m: PSMorphism, source: PSObject, target: PSObject) -> None:
    if m.reduction.source != source.type or m.reduction.target != target.type:
        raise TypeMismatchError(
            f"morphism {m.reduction.source} -> {m.reduction.target} does not fit "
            f"endpoints '{source.type}' -> '{target.type}'"
        )
