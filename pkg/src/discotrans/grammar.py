"""Free pregroup type algebra and search for cup-built type reductions.

Types are words of simple types, a simple type being a basic type name
decorated with an integer adjoint exponent (``n^l`` is ``(n, -1)``,
``n^r`` is ``(n, +1)``, iterated adjoints stack).  A reduction is a
planar set of cups, each contracting an adjacent ``(x, z) (x, z+1)``
pair once everything nested inside has been contracted.

>>> t = parse_type("n^r s n^l")
>>> str(t)
'n^r s n^l'
>>> [r.sorted_cups for r in reduce_search(parse_type("n n^r s n^l n"), parse_type("s"))]
[((0, 1), (3, 4))]
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from functools import cache
from itertools import islice
from typing import Collection, Iterable, Iterator

from .errors import (
    InvalidReductionError,
    TypeMismatchError,
    TypeSyntaxError,
    UnknownBasicTypeError,
)

# Basic types are bare identifier strings; models declare the generator set.
BasicType = str

_SIMPLE_RE = re.compile(r"^([A-Za-z_][A-Za-z0-9_]*)(?:\^(l+|r+))?$")


@dataclass(frozen=True, order=True)
class SimpleType:
    """A basic type with an adjoint exponent: z < 0 left, z > 0 right."""

    base: BasicType
    z: int = 0

    @property
    def left(self) -> SimpleType:
        return SimpleType(self.base, self.z - 1)

    @property
    def right(self) -> SimpleType:
        return SimpleType(self.base, self.z + 1)

    def __str__(self) -> str:
        if self.z < 0:
            return f"{self.base}^{'l' * -self.z}"
        if self.z > 0:
            return f"{self.base}^{'r' * self.z}"
        return self.base


@dataclass(frozen=True)
class PregroupType:
    """A word of simple types; the empty word is the monoidal unit.

    >>> g = PregroupType((SimpleType("n"), SimpleType("s", 1)))
    >>> str(g.left)
    's n^l'
    >>> g.left.right == g
    True
    """

    simples: tuple[SimpleType, ...] = ()

    def __matmul__(self, other: PregroupType) -> PregroupType:
        return PregroupType(self.simples + other.simples)

    def __len__(self) -> int:
        return len(self.simples)

    def adjoint(self, z: int) -> PregroupType:
        """z-fold adjoint: exponents shift by z, order reverses when z is odd."""
        simples = tuple(SimpleType(s.base, s.z + z) for s in self.simples)
        return PregroupType(simples[::-1] if z % 2 else simples)

    @property
    def left(self) -> PregroupType:
        return self.adjoint(-1)

    @property
    def right(self) -> PregroupType:
        return self.adjoint(+1)

    def __str__(self) -> str:
        return " ".join(str(s) for s in self.simples)


UNIT = PregroupType()


def parse_type(text: str, basics: Collection[str] | None = None) -> PregroupType:
    """Parse a whitespace-separated type string; "" is the unit type.

    When ``basics`` is given, every basic type name must belong to it.

    >>> parse_type("n^ll").simples
    (SimpleType(base='n', z=-2),)
    """
    simples = []
    for token in text.split():
        match = _SIMPLE_RE.match(token)
        if match is None:
            raise TypeSyntaxError(f"malformed simple type {token!r}")
        name, suffix = match.groups()
        if basics is not None and name not in basics:
            raise UnknownBasicTypeError(f"unknown basic type {name!r}")
        z = 0 if suffix is None else (len(suffix) if suffix[0] == "r" else -len(suffix))
        simples.append(SimpleType(name, z))
    return PregroupType(tuple(simples))


def tensor_types(g: PregroupType, h: PregroupType) -> PregroupType:
    """Monoidal product of types: concatenation."""
    return g @ h


@dataclass(frozen=True)
class Reduction:
    """A type reduction witnessed by cups over the source word.

    ``cups`` holds index pairs (i, j), i < j, each contracting the pair
    ``(x, z)`` at i with ``(x, z+1)`` at j; ``survivors`` lists the
    uncupped indices in order, and spells out the target.  Construction
    validates the whole structure by iterated adjacent-pair elimination.
    """

    source: PregroupType
    target: PregroupType
    cups: frozenset[tuple[int, int]]
    survivors: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "cups", frozenset(tuple(c) for c in self.cups))
        object.__setattr__(self, "survivors", tuple(self.survivors))
        _validate(self)

    @property
    def sorted_cups(self) -> tuple[tuple[int, int], ...]:
        return tuple(sorted(self.cups))

    @property
    def is_identity(self) -> bool:
        return not self.cups

    @classmethod
    def identity(cls, g: PregroupType) -> Reduction:
        return cls(g, g, frozenset(), tuple(range(len(g))))

    @classmethod
    def from_cups(cls, source: PregroupType, cups: Iterable[tuple[int, int]]) -> Reduction:
        """Build a reduction from its cups alone, deriving survivors and target."""
        cupset = frozenset(tuple(c) for c in cups)
        cupped = {i for cup in cupset for i in cup}
        survivors = tuple(i for i in range(len(source)) if i not in cupped)
        target = PregroupType(tuple(source.simples[i] for i in survivors))
        return cls(source, target, cupset, survivors)

    def __str__(self) -> str:
        if not self.cups:
            return "id"
        return "".join(f"({i},{j})" for i, j in self.sorted_cups)


def _validate(r: Reduction) -> None:
    n = len(r.source)
    seen: set[int] = set()
    for cup in r.cups:
        if len(cup) != 2 or not (0 <= cup[0] < cup[1] < n):
            raise InvalidReductionError(f"cup {cup} out of range for word of length {n}")
        if seen & set(cup):
            raise InvalidReductionError(f"index reused across cups at {cup}")
        seen |= set(cup)
    expected_survivors = tuple(i for i in range(n) if i not in seen)
    if r.survivors != expected_survivors:
        raise InvalidReductionError(
            f"survivors {r.survivors} do not list the uncupped indices in order"
        )
    if tuple(r.source.simples[i] for i in r.survivors) != r.target.simples:
        raise InvalidReductionError("surviving simple types do not spell the target")
    # Iterated adjacent-pair elimination: a cup may fire only once the two
    # endpoints are adjacent among the still-alive indices; this enforces
    # both planarity and fully-contracted cup interiors.
    alive = set(range(n))
    pending = set(r.cups)
    while pending:
        fired = None
        for i, j in pending:
            if all(k not in alive for k in range(i + 1, j)):
                left, right = r.source.simples[i], r.source.simples[j]
                if left.base != right.base or right.z != left.z + 1:
                    raise InvalidReductionError(
                        f"cup ({i},{j}) joins {left} with {right}, not an adjoint pair"
                    )
                fired = (i, j)
                break
        if fired is None:
            raise InvalidReductionError("cups are crossing or enclose surviving material")
        alive -= set(fired)
        pending.discard(fired)


@cache
def _reducible(word: tuple[SimpleType, ...], target: tuple[SimpleType, ...]) -> bool:
    """Memoized feasibility of reducing ``word`` onto ``target``."""
    if len(word) == len(target):
        return word == target
    if len(word) < len(target) or (len(word) - len(target)) % 2:
        return False
    for i in range(min(len(target), len(word) - 1) + 1):
        if i > 0 and word[i - 1] != target[i - 1]:
            return False
        opener = word[i]
        for j in range(i + 1, len(word), 2):
            closer = word[j]
            if closer.base != opener.base or closer.z != opener.z + 1:
                continue
            if _reducible(word[i + 1 : j], ()) and _reducible(word[j + 1 :], target[i:]):
                return True
    return False


def _enum_cups(
    word: tuple[SimpleType, ...], target: tuple[SimpleType, ...]
) -> Iterator[tuple[tuple[int, int], ...]]:
    """Yield every cup set reducing ``word`` to ``target``.

    Cup sets come out sorted by opening index and are emitted in
    lexicographic order of that sorted sequence, so truncation gives the
    leftmost-cup-first results.  Recursion is on the first cup (i, j):
    everything left of i survives, the interior contracts to the unit,
    and the remainder reduces to the leftover target.
    """
    if len(word) == len(target):
        if word == target:
            yield ()
        return
    if len(word) < len(target) or (len(word) - len(target)) % 2:
        return
    if not _reducible(word, target):
        return
    for i in range(min(len(target), len(word) - 1) + 1):
        if i > 0 and word[i - 1] != target[i - 1]:
            return
        opener = word[i]
        for j in range(i + 1, len(word), 2):
            closer = word[j]
            if closer.base != opener.base or closer.z != opener.z + 1:
                continue
            for inner in _enum_cups(word[i + 1 : j], ()):
                shifted_inner = tuple((a + i + 1, b + i + 1) for a, b in inner)
                for rest in _enum_cups(word[j + 1 :], target[i:]):
                    shifted_rest = tuple((a + j + 1, b + j + 1) for a, b in rest)
                    yield ((i, j),) + shifted_inner + shifted_rest


def reduce_search(
    source: PregroupType, target: PregroupType, max_results: int | None = None
) -> list[Reduction]:
    """Find reductions from source to target, leftmost-cup-first.

    Returns up to ``max_results`` distinct reductions (all of them when
    None); an empty list when no reduction exists.
    """
    if max_results is not None and max_results < 1:
        raise ValueError("max_results must be at least 1")
    results = []
    for cups in islice(_enum_cups(source.simples, target.simples), max_results):
        cupped = {i for cup in cups for i in cup}
        survivors = tuple(i for i in range(len(source)) if i not in cupped)
        results.append(Reduction(source, target, frozenset(cups), survivors))
    return results


def compose_reductions(r2: Reduction, r1: Reduction) -> Reduction:
    """Sequential composite r2 after r1; r2's cups relabel through r1's survivors."""
    if r1.target != r2.source:
        raise TypeMismatchError(
            f"cannot compose: first lands in '{r1.target}' but second starts at '{r2.source}'"
        )
    lifted = {(r1.survivors[i], r1.survivors[j]) for i, j in r2.cups}
    survivors = tuple(r1.survivors[k] for k in r2.survivors)
    return Reduction(r1.source, r2.target, frozenset(r1.cups | lifted), survivors)


def tensor_reductions(r1: Reduction, r2: Reduction) -> Reduction:
    """Side-by-side product of reductions on the concatenated source."""
    off = len(r1.source)
    cups = set(r1.cups) | {(i + off, j + off) for i, j in r2.cups}
    survivors = r1.survivors + tuple(k + off for k in r2.survivors)
    return Reduction(
        r1.source @ r2.source, r1.target @ r2.target, frozenset(cups), survivors
    )
