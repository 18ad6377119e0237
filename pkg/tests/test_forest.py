import pickle

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import pforests, trees, words
from thompsonf.forest import (
    LEAF,
    Caret,
    Forest,
    OriginTag,
    ParseError,
    PointedForest,
    apply_generator,
    apply_generator_inverse,
    canonicalize,
    carets,
    equals,
    format_pforest,
    graft,
    identity,
    leaves,
    multiply,
    parse_forest,
    parse_pforest,
    parse_tree,
)
from thompsonf.words import apply_word, evaluate

P = parse_pforest
T = parse_tree


def test_identity():
    e = identity()
    assert e.key == "p=0:"
    assert e.trees == () and e.pointer == 0
    assert e == canonicalize(P("p=0: . ."))
    assert apply_generator(e, 0) != e


@pytest.mark.parametrize(
    "start, i, expected",
    [
        ("p=0:", 1, "p=0: (..)"),
        ("p=0:", 0, "p=1:"),
        ("p=0: (..)", 3, "p=0: (..) . (..)"),
        ("p=1: (..)", 1, "p=1: (..) (..)"),
        ("p=0: (..) (..)", 1, "p=0: ((..)(..))"),
        ("p=2: (..)", 2, "p=2: (..) . . (..)"),
    ],
)
def test_apply_generator(start, i, expected):
    assert apply_generator(P(start), i).key == expected


def test_apply_generator_inverse():
    assert apply_generator_inverse(P("p=1:"), 0) == P("p=0:")
    assert apply_generator_inverse(P("p=0: ((..).)"), 1) == P("p=0: (..)")
    assert apply_generator_inverse(P("p=0: ((..).)"), 1) is not None
    assert apply_generator(P("p=0: (..)"), 1) == P("p=0: ((..).)")
    assert apply_generator_inverse(P("p=0:"), 1) is None
    assert apply_generator_inverse(P("p=0:"), 0) is None
    assert apply_generator_inverse(P("p=0: (..)"), 2) is None
    assert apply_generator_inverse(P("p=0: . (..)"), 2) == identity()


def test_negative_generator_rejected():
    with pytest.raises(ValueError):
        apply_generator(identity(), -1)


def test_multiply_examples():
    a = P("p=0: (..)")
    assert multiply(a, a) == P("p=0: ((..).)")
    assert multiply(a, a) == evaluate((1, 1))
    assert multiply(P("p=1:"), P("p=0: (..)")) == P("p=1: . (..)")
    assert multiply(P("p=2: (..) ((..).) (.(..))"), identity()) == P("p=2: (..) ((..).) (.(..))")


def test_graft():
    assert graft([LEAF, LEAF], T("(..)")) == T("(..)")
    assert graft([T("(..)"), LEAF], T("(..)")) == T("((..).)")
    assert graft(Forest([T("(..)")]), T("(..)")) == T("((..).)")
    assert graft([], T("(.(..))")) == T("(.(..))")
    r = [T("(..)"), LEAF, T("(.(..))")]
    g = graft(r, T("((..).)"))
    assert g == T("(((..).)(.(..)))")
    assert carets(g) == carets(r) + 2


def test_graft_keeps_tags():
    r = [Caret(LEAF, LEAF, OriginTag.FROM_R), LEAF]
    t = Caret(LEAF, LEAF, OriginTag.FROM_T)
    g = graft(r, t)
    assert g.tag is OriginTag.FROM_T
    assert g.left.tag is OriginTag.FROM_R


def test_counts_and_equality():
    assert carets(P("p=0: (..) (..)")) == 2
    assert leaves(T("(.(..))")) == 3
    assert equals(P("p=1: (..) ."), P("p=1: (..)"))
    assert not equals(P("p=1: (..)"), P("p=0: (..)"))
    assert Caret(LEAF, LEAF, OriginTag.FROM_T) == T("(..)")


def test_pointer_beyond_stored_length():
    p = PointedForest([T("(..)")], 5)
    assert p.key == "p=5: (..)"
    assert p.pointed_tree == LEAF
    assert apply_generator(p, 1).key == "p=5: (..) . . . . (..)"


@pytest.mark.parametrize("bad", ["", "(.", "(..", "..", "(...)", "(.x)", ")", "(()"])
def test_parse_tree_rejects(bad):
    with pytest.raises(ParseError):
        parse_tree(bad)


@pytest.mark.parametrize("bad", ["", "0: (..)", "p=: (..)", "p=a: (..)", "p=0 (..)", "p=0: (.."])
def test_parse_pforest_rejects(bad):
    with pytest.raises(ParseError):
        parse_pforest(bad)


def test_parse_normalizes_trailing_trivial():
    assert P("p=0: (..) . .").key == "p=0: (..)"
    assert parse_forest(". . .") == Forest()
    assert P("  p=3:  ").key == "p=3:"


def test_pickle_round_trip():
    p = P("p=2: (..) . ((..).)")
    assert pickle.loads(pickle.dumps(p)) == p
    assert pickle.loads(pickle.dumps(LEAF)) is LEAF


@given(pforests())
def test_text_round_trip(p):
    assert parse_pforest(format_pforest(p)) == p


@given(pforests(), st.integers(0, 6))
def test_inverse_round_trip(p, i):
    assert apply_generator_inverse(apply_generator(p, i), i) == p


@given(pforests(), st.integers(0, 6))
def test_inverse_is_right_inverse(p, i):
    q = apply_generator_inverse(p, i)
    if q is not None:
        assert apply_generator(q, i) == p


@given(pforests(), st.integers(0, 6))
def test_generator_matches_multiplication(p, i):
    assert apply_generator(p, i) == multiply(p, evaluate((i,)))


@given(pforests(), words)
def test_multiply_matches_word_fold(p, u):
    assert multiply(p, evaluate(u)) == apply_word(p, u)


@given(pforests(max_carets=6), pforests(max_carets=6), pforests(max_carets=6))
def test_associativity(a, b, c):
    assert multiply(multiply(a, b), c) == multiply(a, multiply(b, c))


@given(pforests(), pforests())
def test_identity_law_and_caret_additivity(p, q):
    assert multiply(p, identity()) == p
    assert multiply(identity(), q) == q
    assert carets(multiply(p, q)) == carets(p) + carets(q)
    assert multiply(p, q).pointer == p.pointer + q.pointer


@given(pforests())
def test_canonicalize_idempotent(p):
    c = canonicalize(p)
    assert canonicalize(c) == c
    assert equals(c, p)
    padded = PointedForest(list(p.trees) + [LEAF, LEAF], p.pointer)
    assert padded == p and hash(padded) == hash(p)


@given(trees())
def test_tree_counts(t):
    assert t.leaves == t.carets + 1
    assert t.code.count("(") == t.carets
    assert t.code.count(".") == t.leaves
    assert parse_tree(t.code) == t
