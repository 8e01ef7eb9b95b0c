import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from discotrans.errors import InvalidReductionError, TypeSyntaxError, UnknownBasicTypeError
from discotrans.grammar import (
    PregroupType,
    Reduction,
    SimpleType,
    compose_reductions,
    parse_type,
    reduce_search,
    tensor_types,
)
from oracles import all_reductions, random_reduction, reductions_by_elimination

simple_types = st.builds(
    SimpleType, st.sampled_from(["x", "y"]), st.integers(min_value=-2, max_value=2)
)
words = st.lists(simple_types, max_size=6).map(lambda s: PregroupType(tuple(s)))
short_words = st.lists(
    st.builds(SimpleType, st.just("a"), st.integers(-1, 1)), max_size=6
).map(lambda s: PregroupType(tuple(s)))


# -- parsing ------------------------------------------------------------------

def test_parse_transitive_verb_type():
    assert parse_type("n^r s n^l").simples == (
        SimpleType("n", 1),
        SimpleType("s", 0),
        SimpleType("n", -1),
    )


def test_parse_empty_is_unit():
    assert parse_type("") == PregroupType()


def test_parse_iterated_left_adjoint():
    # doubled suffix agrees with taking the left adjoint twice
    assert parse_type("n^ll").simples == (SimpleType("n").left.left,)
    assert parse_type("n^rr").simples == (SimpleType("n").right.right,)


@pytest.mark.parametrize("bad", ["n^", "n^lr", "n^x", "^l", "n^rl", "3n"])
def test_parse_rejects_malformed_tokens(bad):
    with pytest.raises(TypeSyntaxError):
        parse_type(bad)


def test_parse_checks_declared_basics():
    parse_type("n s", basics={"n", "s"})
    with pytest.raises(UnknownBasicTypeError):
        parse_type("n q", basics={"n", "s"})


@given(words)
def test_parse_round_trips_with_printer(g):
    assert parse_type(str(g)) == g


# -- adjoints -----------------------------------------------------------------

@given(simple_types)
def test_simple_adjoints_cancel(s):
    assert s.left.right == s
    assert s.right.left == s


@given(words, words)
def test_product_adjoint_reverses(g, h):
    assert (g @ h).left == h.left @ g.left
    assert (g @ h).right == h.right @ g.right


@given(words, words, words)
def test_tensor_types_monoid(g, h, k):
    unit = PregroupType()
    assert tensor_types(g, unit) == g
    assert tensor_types(unit, g) == g
    assert tensor_types(tensor_types(g, h), k) == tensor_types(g, tensor_types(h, k))


# -- reduction search ----------------------------------------------------------

def test_transitive_sentence_reduction():
    found = reduce_search(parse_type("n n^r s n^l n"), parse_type("s"))
    assert len(found) == 1
    assert found[0].sorted_cups == ((0, 1), (3, 4))
    assert found[0].survivors == (2,)


def test_identity_reduction_found():
    g = parse_type("n")
    found = reduce_search(g, g)
    assert found == [Reduction.identity(g)]


def test_single_inner_cup():
    found = reduce_search(parse_type("a a^l a"), parse_type("a"))
    assert [r.sorted_cups for r in found] == [((1, 2),)]


def test_no_reduction_gives_empty_list():
    assert reduce_search(parse_type("n n"), parse_type("s")) == []


def test_max_results_is_a_prefix():
    g = parse_type("a a^r a a^r")
    target = parse_type("a a^r")
    everything = reduce_search(g, target)
    assert [r.sorted_cups for r in everything] == [((0, 1),), ((2, 3),)]
    assert reduce_search(g, target, max_results=1) == everything[:1]
    with pytest.raises(ValueError):
        reduce_search(g, target, max_results=0)


def test_results_in_leftmost_lexicographic_order():
    g = parse_type("a a^r a a^r a a^r")
    found = [r.sorted_cups for r in reduce_search(g, parse_type("a a^r"))]
    assert found == sorted(found)


@settings(max_examples=150, deadline=None)
@given(short_words, st.lists(st.builds(SimpleType, st.just("a"), st.integers(-1, 1)), max_size=2))
def test_search_matches_elimination_oracle(source, target_simples):
    target = PregroupType(tuple(target_simples))
    ours = {r.cups for r in reduce_search(source, target)}
    assert ours == reductions_by_elimination(source, target)


@settings(max_examples=100, deadline=None)
@given(words)
def test_self_search_contains_identity(g):
    assert Reduction.identity(g) in reduce_search(g, g)


@settings(max_examples=100, deadline=None)
@given(short_words)
def test_no_returned_reduction_has_crossing_cups(source):
    for r in all_reductions(source):
        for found in reduce_search(r.source, r.target):
            for (i, j) in found.cups:
                for (k, l) in found.cups:
                    assert not (i < k < j < l)


# -- reduction validation --------------------------------------------------------

def test_crossing_cups_rejected():
    g = parse_type("a a a^r a^r")
    with pytest.raises(InvalidReductionError):
        Reduction.from_cups(g, [(0, 2), (1, 3)])


def test_non_adjoint_cup_rejected():
    with pytest.raises(InvalidReductionError):
        Reduction.from_cups(parse_type("a a"), [(0, 1)])


def test_cup_enclosing_survivor_rejected():
    # the survivor between the cup ends blocks elimination
    with pytest.raises(InvalidReductionError):
        Reduction.from_cups(parse_type("a s a^r"), [(0, 2)])


def test_wrong_survivor_order_rejected():
    g = parse_type("a a")
    with pytest.raises(InvalidReductionError):
        Reduction(g, g, frozenset(), (1, 0))


def test_survivors_must_spell_target():
    with pytest.raises(InvalidReductionError):
        Reduction(parse_type("a a"), parse_type("a"), frozenset(), (0, 1))


# -- composition ----------------------------------------------------------------

def test_compose_relabels_through_survivors():
    r1 = Reduction.from_cups(parse_type("n n^r n n^r"), [(0, 1)])
    assert str(r1.target) == "n n^r"
    r2 = Reduction.from_cups(parse_type("n n^r"), [(0, 1)])
    composite = compose_reductions(r2, r1)
    assert composite.sorted_cups == ((0, 1), (2, 3))
    assert composite.target == PregroupType()


def test_compose_type_mismatch():
    r = Reduction.identity(parse_type("n"))
    with pytest.raises(Exception):
        compose_reductions(Reduction.identity(parse_type("s")), r)


def test_compose_unit_laws(rng):
    for _ in range(50):
        source = _random_word(rng)
        r = random_reduction(rng, source)
        assert compose_reductions(r, Reduction.identity(source)) == r
        assert compose_reductions(Reduction.identity(r.target), r) == r


def test_compose_associative(rng):
    for _ in range(100):
        source = _random_word(rng)
        r1 = random_reduction(rng, source)
        r2 = random_reduction(rng, r1.target)
        r3 = random_reduction(rng, r2.target)
        left = compose_reductions(r3, compose_reductions(r2, r1))
        right = compose_reductions(compose_reductions(r3, r2), r1)
        assert left == right


def _random_word(rng):
    simples = tuple(
        SimpleType(("x", "y")[rng.integers(2)], int(rng.integers(-1, 2)))
        for _ in range(rng.integers(0, 7))
    )
    return PregroupType(simples)
