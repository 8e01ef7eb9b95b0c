"""Exception types shared across the package."""


class DiscotransError(Exception):
    """Base class for all errors raised by this package."""


class TypeSyntaxError(DiscotransError):
    """A type string could not be parsed."""


class UnknownBasicTypeError(DiscotransError):
    """A basic type is not declared by the relevant language model or grammar map."""


class TypeMismatchError(DiscotransError):
    """Two objects that must share a pregroup type (or be composable) do not."""


class InvalidReductionError(DiscotransError):
    """A reduction's cups fail the planarity / adjoint-pair validity check."""


class ModelMismatchError(DiscotransError):
    """Operands belong to different language models."""


class UnknownWordError(DiscotransError):
    """A phrase uses a word that is not in the lexicon."""


class SenseIndexError(DiscotransError):
    """A phrase's sense choice points outside a word's entry list."""


class NoReductionError(DiscotransError):
    """No type reduction exists from a phrase's type to the requested target."""


class NonFunctorialTranslationError(DiscotransError):
    """The requested grammar map cannot be realised by a single-valued monoidal functor."""


class RankDeficientError(DiscotransError):
    """The nearest-orthogonal projection is not unique for a singular input."""


class BudgetExceededError(DiscotransError):
    """A dictionary build would enumerate more phrase pairs than the configured cap."""


class FormatError(DiscotransError):
    """An input document does not match the expected file schema."""
