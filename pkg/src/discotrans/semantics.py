"""Language models: dimension assignments and reductions as contractions.

A language model sends each basic type to a dimension; a pregroup type
then names a tensor shape (adjoint exponents keep the base dimension,
duals being identified with their primal along the fixed basis).  A
reduction acts on a tensor of its source type by summing each cupped
axis pair against the canonical dot product.
"""

from __future__ import annotations

import math
import string
from dataclasses import dataclass

import numpy as np

from .errors import TypeMismatchError, UnknownBasicTypeError
from .grammar import PregroupType, Reduction

_AXIS_LETTERS = string.ascii_lowercase + string.ascii_uppercase


@dataclass(frozen=True)
class LanguageModel:
    """Assignment of a positive dimension to every basic type.

    >>> m = LanguageModel("toy", {"n": 4, "s": 1})
    >>> m.dim("n")
    4
    """

    name: str
    dims: dict[str, int]

    def __post_init__(self) -> None:
        for base, dim in self.dims.items():
            if dim < 1:
                raise ValueError(f"dimension of {base!r} must be >= 1, got {dim}")

    def dim(self, base: str) -> int:
        try:
            return self.dims[base]
        except KeyError:
            raise UnknownBasicTypeError(
                f"basic type {base!r} is not declared by model {self.name!r}"
            ) from None

    @property
    def basics(self) -> frozenset[str]:
        return frozenset(self.dims)


def space_shape(model: LanguageModel, g: PregroupType) -> list[int]:
    """Per-simple-type dimension list of the space F(g); [] for the unit."""
    return [model.dim(s.base) for s in g.simples]


@dataclass(frozen=True, eq=False)
class Tensor:
    """A dense real tensor typed by a pregroup word.

    The array has one axis per simple type; a unit-typed tensor is a
    0-d scalar.  Arrays are frozen at construction.
    """

    type: PregroupType
    array: np.ndarray

    def __post_init__(self) -> None:
        arr = np.asarray(self.array, dtype=float)
        if arr.ndim != len(self.type.simples):
            raise TypeMismatchError(
                f"array of rank {arr.ndim} cannot carry type '{self.type}' "
                f"({len(self.type.simples)} simple types)"
            )
        arr = arr.copy()
        arr.flags.writeable = False
        object.__setattr__(self, "array", arr)

    @property
    def shape(self) -> tuple[int, ...]:
        return self.array.shape

    @property
    def flat(self) -> np.ndarray:
        return self.array.reshape(-1)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Tensor):
            return NotImplemented
        return self.type == other.type and np.array_equal(self.array, other.array)

    __hash__ = None

    def __str__(self) -> str:
        return f"Tensor('{self.type}', shape={list(self.shape)})"


def make_tensor(model: LanguageModel, g: PregroupType, data) -> Tensor:
    """Build a tensor of type g from flat row-major (or already shaped) data."""
    shape = space_shape(model, g)
    arr = np.asarray(data, dtype=float).reshape(shape)
    return Tensor(g, arr)


def unit_scalar(value: float = 1.0) -> Tensor:
    return Tensor(PregroupType(), np.asarray(float(value)))


def tensor_product(u: Tensor, v: Tensor) -> Tensor:
    """Outer product; flattens row-major to the Kronecker product."""
    return Tensor(u.type @ v.type, np.multiply.outer(u.array, v.array))


def _contract(r: Reduction, array: np.ndarray) -> np.ndarray:
    """Apply a reduction's cups as dot-product contractions on ``array``.

    Extra trailing axes beyond the source word are carried through
    unchanged (used to push a whole basis through in one call).
    """
    n = len(r.source)
    extra = array.ndim - n
    if extra < 0:
        raise TypeMismatchError(
            f"array of rank {array.ndim} is too small for source '{r.source}'"
        )
    if n + extra > len(_AXIS_LETTERS):
        raise TypeMismatchError("too many axes for contraction")
    sub = list(_AXIS_LETTERS[: n + extra])
    for i, j in r.cups:
        sub[j] = sub[i]
    out = [sub[k] for k in r.survivors] + list(_AXIS_LETTERS[n : n + extra])
    return np.einsum(f"{''.join(sub)}->{''.join(out)}", array)


def apply_reduction(model: LanguageModel, r: Reduction, t: Tensor) -> Tensor:
    """Evaluate the reduction on a tensor of its source type."""
    if t.type != r.source:
        raise TypeMismatchError(
            f"tensor has type '{t.type}' but reduction starts at '{r.source}'"
        )
    if list(t.shape) != space_shape(model, r.source):
        raise TypeMismatchError(
            f"tensor shape {list(t.shape)} does not match model "
            f"{model.name!r} shape {space_shape(model, r.source)}"
        )
    return Tensor(r.target, _contract(r, t.array))


def reduction_matrix(model: LanguageModel, r: Reduction) -> np.ndarray:
    """Explicit matrix of the reduction between flattened spaces.

    Built entry by entry from the Kronecker deltas of the cups, with no
    shared code with apply_reduction, so the two can check each other.
    """
    src_shape = space_shape(model, r.source)
    tgt_shape = space_shape(model, r.target)
    matrix = np.zeros((math.prod(tgt_shape), math.prod(src_shape)))
    for col, idx in enumerate(np.ndindex(*src_shape)):
        if any(idx[i] != idx[j] for i, j in r.cups):
            continue
        out = tuple(idx[k] for k in r.survivors)
        row = int(np.ravel_multi_index(out, tgt_shape)) if tgt_shape else 0
        matrix[row, col] = 1.0
    return matrix


def normalize_sentence(model: LanguageModel, t: Tensor) -> Tensor:
    """Collapse a one-dimensional sentence value: zero stays zero, anything else becomes one."""
    if t.array.size != 1:
        raise TypeMismatchError(
            f"normalization needs a one-dimensional sentence value, got shape {list(t.shape)}"
        )
    value = 0.0 if float(t.flat[0]) == 0.0 else 1.0
    return Tensor(t.type, np.full(t.shape, value))
