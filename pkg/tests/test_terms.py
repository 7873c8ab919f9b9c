import pytest
from hypothesis import given, strategies as st

from ordnota import C, W, ZERO, X, const, omega, render
from ordnota.terms import at, postfix_tokens, replace_at, subterms


def test_interning_makes_equal_terms_identical():
    assert C(ZERO, W) is C(ZERO, omega(1))
    assert C(C(ZERO, ZERO), ZERO) is C(C(ZERO, ZERO), ZERO)
    assert omega(2) is not omega(1)


def test_sizes_count_symbols():
    assert ZERO.size == 1
    assert C(ZERO, W).size == 3
    assert C(C(ZERO, ZERO), ZERO).size == 5
    assert C(ZERO, ZERO, ZERO).size == 4


def test_render_prefix_and_postfix():
    t = C(C(ZERO, ZERO), ZERO)
    assert render(t) == "C(C(0,0),0)"
    assert render(C(W, ZERO)) == "C(W,0)"
    assert render(omega(2)) == "W_2"
    assert render(const(1)) == "$1"
    assert render(X) == "x"
    assert render(t, "postfix").replace(" ", "") == "000CC"


def test_postfix_tokens_put_arguments_first():
    t = C(ZERO, W)
    toks = postfix_tokens(t)
    assert toks[-1] == postfix_tokens(C(W, ZERO))[-1]
    assert len(toks) == 3


def test_paths_address_subterms():
    t = C(C(ZERO, W), ZERO)
    assert at(t, (0, 1)) is W
    assert replace_at(t, (0, 1), ZERO) is C(C(ZERO, ZERO), ZERO)
    assert at(t, ()) is t


def test_subterms_includes_self():
    t = C(W, ZERO)
    found = dict(subterms(t))
    assert found[()] is t
    assert found[(0,)] is W


def test_terms_are_immutable():
    with pytest.raises((AttributeError, TypeError)):
        ZERO.size = 3


leaves = st.sampled_from([ZERO, W, omega(2)])
trees = st.recursive(leaves, lambda kids: st.tuples(kids, kids).map(lambda p: C(*p)), max_leaves=8)


@given(trees)
def test_size_matches_postfix_length(t):
    assert t.size == len(postfix_tokens(t))


@given(trees)
def test_rebuilding_gives_the_same_object(t):
    def rebuild(s):
        return C(*(rebuild(a) for a in s.args)) if s.args else s
    assert rebuild(t) is t
