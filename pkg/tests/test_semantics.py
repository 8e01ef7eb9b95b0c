import numpy as np
import pytest

from discotrans.errors import TypeMismatchError, UnknownBasicTypeError
from discotrans.grammar import (
    PregroupType,
    Reduction,
    compose_reductions,
    parse_type,
    tensor_reductions,
)
from discotrans.semantics import (
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
from conftest import random_model, random_word
from oracles import random_reduction


# -- models and shapes ---------------------------------------------------------

def test_model_rejects_zero_dimension():
    with pytest.raises(ValueError):
        LanguageModel("bad", {"n": 0})


def test_space_shape_of_verb_type():
    model = LanguageModel("m", {"n": 4, "s": 1})
    assert space_shape(model, parse_type("n^r s n^l")) == [4, 1, 4]


def test_space_shape_of_unit_is_scalar():
    model = LanguageModel("m", {"n": 3})
    assert space_shape(model, PregroupType()) == []


def test_space_shape_is_monoidal():
    model = LanguageModel("m", {"n": 3})
    assert space_shape(model, parse_type("n n")) == [3, 3]


def test_space_shape_unknown_basic():
    model = LanguageModel("m", {"n": 3})
    with pytest.raises(UnknownBasicTypeError):
        space_shape(model, parse_type("q"))


def test_adjoints_keep_base_dimension():
    model = LanguageModel("m", {"n": 3})
    assert space_shape(model, parse_type("n^l n n^r n^ll")) == [3, 3, 3, 3]


# -- tensors --------------------------------------------------------------------

def test_tensor_rank_must_match_type():
    with pytest.raises(TypeMismatchError):
        Tensor(parse_type("n n"), np.zeros(3))


def test_tensor_arrays_are_frozen():
    t = make_tensor(LanguageModel("m", {"n": 2}), parse_type("n"), [1, 2])
    with pytest.raises(ValueError):
        t.array[0] = 5


def test_tensor_product_unit():
    model = LanguageModel("m", {"n": 4})
    u = make_tensor(model, parse_type("n"), [2, 5, 3, 1])
    assert tensor_product(u, unit_scalar(1.0)) == u
    assert tensor_product(unit_scalar(1.0), u) == u


def test_tensor_product_of_basis_vectors():
    model = LanguageModel("m", {"n": 2})
    e1 = make_tensor(model, parse_type("n"), [1, 0])
    e2 = make_tensor(model, parse_type("n"), [0, 1])
    out = tensor_product(e1, e2)
    assert out.array.tolist() == [[0, 1], [0, 0]]


def test_tensor_product_norm_multiplies(rng):
    for _ in range(25):
        model = random_model(rng)
        g, h = random_word(rng, max_len=3), random_word(rng, max_len=3)
        u = make_tensor(model, g, rng.standard_normal(_shape_size(model, g)))
        v = make_tensor(model, h, rng.standard_normal(_shape_size(model, h)))
        left = np.linalg.norm(tensor_product(u, v).flat)
        right = np.linalg.norm(u.flat) * np.linalg.norm(v.flat)
        assert left == pytest.approx(right, abs=1e-9)


def _shape_size(model, g):
    return int(np.prod(space_shape(model, g), dtype=int))


# -- contraction -----------------------------------------------------------------

def test_identity_reduction_keeps_tensor(rng):
    model = random_model(rng)
    g = random_word(rng, max_len=4)
    t = make_tensor(model, g, rng.standard_normal(_shape_size(model, g)))
    assert apply_reduction(model, Reduction.identity(g), t) == t


def test_contraction_requires_matching_type():
    model = LanguageModel("m", {"n": 2})
    r = Reduction.from_cups(parse_type("n n^r"), [(0, 1)])
    t = make_tensor(model, parse_type("n"), [1, 0])
    with pytest.raises(TypeMismatchError):
        apply_reduction(model, r, t)


def test_cup_is_the_dot_product():
    model = LanguageModel("m", {"n": 2})
    r = Reduction.from_cups(parse_type("n n^r"), [(0, 1)])
    t = make_tensor(model, parse_type("n n^r"), [[1.0, 2.0], [3.0, 4.0]])
    out = apply_reduction(model, r, t)
    assert out.type == PregroupType()
    assert float(out.array) == pytest.approx(5.0)  # trace


def test_sentence_example_values():
    model = LanguageModel("m", {"n": 4, "s": 1})
    rosie = make_tensor(model, parse_type("n"), [2, 5, 3, 1])
    wears = make_tensor(
        model,
        parse_type("n^r s n^l"),
        np.array(
            [[1, 1, 1, 0], [-1, -1, -1, 0], [1, 1, 1, 0], [-2, -2, -1, 1]]
        ).reshape(4, 1, 4),
    )
    sentence = parse_type("n n^r s n^l n")
    r = Reduction.from_cups(sentence, [(0, 1), (3, 4)])
    boots = make_tensor(model, parse_type("n"), [1, 0, 0, 2])
    a_boot = make_tensor(model, parse_type("n"), [1, 0, 0, 1])
    both = tensor_product(tensor_product(rosie, wears), boots)
    assert float(apply_reduction(model, r, both).flat[0]) == pytest.approx(0.0, abs=1e-9)
    alt = tensor_product(tensor_product(rosie, wears), a_boot)
    assert float(apply_reduction(model, r, alt).flat[0]) == pytest.approx(-1.0, abs=1e-9)


# -- normalization ----------------------------------------------------------------

@pytest.mark.parametrize("value,expected", [(-1.0, 1.0), (0.0, 0.0), (7.3, 1.0)])
def test_normalize_sentence_values(value, expected):
    model = LanguageModel("m", {"s": 1})
    t = make_tensor(model, parse_type("s"), [value])
    assert float(normalize_sentence(model, t).flat[0]) == expected


def test_normalize_rejects_non_scalars():
    model = LanguageModel("m", {"n": 2})
    with pytest.raises(TypeMismatchError):
        normalize_sentence(model, make_tensor(model, parse_type("n"), [1, 2]))


# -- explicit matrices -------------------------------------------------------------

def test_identity_matrix_on_noun():
    model = LanguageModel("m", {"n": 3})
    g = parse_type("n")
    assert np.array_equal(
        reduction_matrix(model, Reduction.identity(g)), np.eye(3)
    )


def test_cup_matrix_is_flattened_dot():
    model = LanguageModel("m", {"n": 2})
    r = Reduction.from_cups(parse_type("n n^r"), [(0, 1)])
    assert reduction_matrix(model, r).tolist() == [[1.0, 0.0, 0.0, 1.0]]


def test_matrix_agrees_with_contraction(rng):
    # dual-route check: explicit delta matrix vs einsum contraction
    for _ in range(100):
        model = random_model(rng, max_dim=4)
        g = random_word(rng, max_len=5)
        r = random_reduction(rng, g)
        t = make_tensor(model, g, rng.standard_normal(_shape_size(model, g)))
        via_matrix = reduction_matrix(model, r) @ t.flat
        direct = apply_reduction(model, r, t).flat
        assert np.max(np.abs(via_matrix - direct), initial=0.0) <= 1e-9


# -- algebraic laws ----------------------------------------------------------------

def test_functoriality_of_contraction(rng):
    for _ in range(100):
        model = random_model(rng, max_dim=4)
        g = random_word(rng, max_len=5)
        r1 = random_reduction(rng, g)
        r2 = random_reduction(rng, r1.target)
        t = make_tensor(model, g, rng.standard_normal(_shape_size(model, g)))
        once = apply_reduction(model, compose_reductions(r2, r1), t)
        twice = apply_reduction(model, r2, apply_reduction(model, r1, t))
        assert np.max(np.abs(once.array - twice.array), initial=0.0) <= 1e-9


def test_monoidality_of_contraction(rng):
    for _ in range(100):
        model = random_model(rng, max_dim=4)
        g, h = random_word(rng, max_len=3), random_word(rng, max_len=3)
        r1, r2 = random_reduction(rng, g), random_reduction(rng, h)
        t = make_tensor(model, g, rng.standard_normal(_shape_size(model, g)))
        u = make_tensor(model, h, rng.standard_normal(_shape_size(model, h)))
        joint = apply_reduction(model, tensor_reductions(r1, r2), tensor_product(t, u))
        split = tensor_product(
            apply_reduction(model, r1, t), apply_reduction(model, r2, u)
        )
        assert np.max(np.abs(joint.array - split.array), initial=0.0) <= 1e-9


def test_contraction_is_bilinear(rng):
    model = LanguageModel("m", {"x": 3})
    g = parse_type("x x^r x")
    r = Reduction.from_cups(g, [(0, 1)])
    for _ in range(20):
        t1 = make_tensor(model, g, rng.standard_normal(27))
        t2 = make_tensor(model, g, rng.standard_normal(27))
        a, b = rng.standard_normal(2)
        combined = make_tensor(model, g, a * t1.array + b * t2.array)
        lhs = apply_reduction(model, r, combined).array
        rhs = (
            a * apply_reduction(model, r, t1).array
            + b * apply_reduction(model, r, t2).array
        )
        assert np.max(np.abs(lhs - rhs)) <= 1e-9
