"""Compositional distributional language models and translations between them."""

from .grammar import (
    UNIT,
    PregroupType,
    Reduction,
    SimpleType,
    compose_reductions,
    parse_type,
    reduce_search,
    tensor_reductions,
    tensor_types,
)
from .semantics import (
    LanguageModel,
    Tensor,
    apply_reduction,
    make_tensor,
    normalize_sentence,
    reduction_matrix,
    space_shape,
    tensor_product,
    unit_scalar,
)
from .product_space import (
    PSMorphism,
    PSObject,
    frobenius_distance,
    ps_compose,
    ps_morphism,
    ps_tensor,
    ps_tensor_morphism,
)
from .lexicon import Lexicon, Phrase, lex_phrase, phrase_meaning, phrase_reduction
from .translation import (
    NaturalityReport,
    Translation,
    alpha_component,
    check_naturality,
    compose_translations,
    fit_alpha,
    identity_translation,
    j_apply,
    nearest_unitary,
    solve_generator_map,
    translate_lexicon,
    translate_morphism,
    translate_object,
    translate_reduction,
)
from .dictionary import (
    DictionaryEntry,
    DictionaryQuery,
    build_dictionary,
    threshold_relation,
)

__version__ = "0.1.0"

__all__ = [
    "UNIT",
    "PregroupType",
    "Reduction",
    "SimpleType",
    "compose_reductions",
    "parse_type",
    "reduce_search",
    "tensor_reductions",
    "tensor_types",
    "LanguageModel",
    "Tensor",
    "apply_reduction",
    "make_tensor",
    "normalize_sentence",
    "reduction_matrix",
    "space_shape",
    "tensor_product",
    "unit_scalar",
    "PSMorphism",
    "PSObject",
    "frobenius_distance",
    "ps_compose",
    "ps_morphism",
    "ps_tensor",
    "ps_tensor_morphism",
    "Lexicon",
    "Phrase",
    "lex_phrase",
    "phrase_meaning",
    "phrase_reduction",
    "NaturalityReport",
    "Translation",
    "alpha_component",
    "check_naturality",
    "compose_translations",
    "fit_alpha",
    "identity_translation",
    "j_apply",
    "nearest_unitary",
    "solve_generator_map",
    "translate_lexicon",
    "translate_morphism",
    "translate_object",
    "translate_reduction",
    "DictionaryEntry",
    "DictionaryQuery",
    "build_dictionary",
    "threshold_relation",
]
