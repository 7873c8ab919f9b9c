from hypothesis import given

from ordnota import ZERO, C, compare, explain, parse, parse_system
from ordnota.dri import b_maximal, b_maximal_alternative, in_H, is_standard_dri
from ordnota.systems import BASE_NOT_MINIMAL, Ordering
from ordnota.harness import all_terms
from conftest import standard_terms
from strategies import standard_term

DRI = parse_system("dri")


def p(text):
    return parse(text, DRI)


def test_epsilon_zero_and_one():
    assert is_standard_dri(p("C(0,C(1,0,0),0)"))[0]
    assert is_standard_dri(p("C(0,0,0)"))[0]
    assert is_standard_dri(p("C(0,0,C(0,0,0))"))[0]


def test_successor_above_fixed_point():
    assert compare(p("C(1,C(1,0,0),0)"), p("C(1,C(0,C(1,0,0),0),0)"), DRI) is Ordering.GREATER


def test_pair_order_with_zero_bases():
    assert compare(p("C(0,0,0)"), p("C(1,0,0)"), DRI) is Ordering.LESS


def test_h_membership():
    x = p("C(1,0,0)")
    eps0 = p("C(0,C(1,0,0),0)")
    assert in_H(x, x, eps0)
    assert in_H(ZERO, x, eps0)


def test_reducible_base_is_rejected():
    d = explain(p("C(0,1,1)"), DRI)
    assert d is not None and d.condition == BASE_NOT_MINIMAL


def test_alternative_characterization_agrees():
    # the characterization presumes standard arguments
    nodes = [t for t in all_terms(DRI, 13) if t.is_node and all(explain(a, DRI) is None for a in t.args)]
    assert len(nodes) > 50
    for t in nodes:
        assert b_maximal(t) == b_maximal_alternative(t), t


def test_successor_is_immediate():
    terms = standard_terms("dri", 13)
    pos = {t: k for k, t in enumerate(terms)}
    for c in terms:
        succ = C(ZERO, ZERO, c)
        if succ in pos:
            assert pos[succ] == pos[c] + 1


@given(standard_term("dri", 13))
def test_node_exceeds_base(t):
    if t.is_node:
        assert compare(t, t.args[2], DRI) is Ordering.GREATER
