import pytest
from hypothesis import given

from ordnota import C, W, X, ZERO, Config, NotationError, compare_configs, parse, parse_system, reflection_config
from ordnota.config import ABOVE_OMEGA, BELOW_OMEGA, config_of_collapse
from ordnota.systems import Ordering
from strategies import standard_term

M1 = parse_system("main:1")


def cfg(a, b, system="main:1"):
    sp = parse_system(system)
    return reflection_config(parse(a, sp), parse(b, sp), sp)


def test_epsilon_zero_configuration():
    c = cfg("C(W,0)", "0")
    assert c.render() == "Lx. C(W,x) | x<W"
    assert c.body is C(W, X)


def test_self_is_identity_configuration():
    assert cfg("C(W,0)", "C(W,0)").body is X


def test_base_equal_to_bound_becomes_hole():
    assert cfg("C(W,C(W,0))", "C(W,0)").body is C(W, X)


def test_constants_recorded():
    c = cfg("C(C(0,0),C(W,0))", "C(W,0)")
    assert c.body is C(parse("C(0,0)", M1), X)
    assert parse("C(0,0)", M1) in c.constants


def test_domain_tag():
    assert cfg("C(W,W)", "W").domain == ABOVE_OMEGA
    assert cfg("C(W,0)", "0").domain == BELOW_OMEGA


def test_config_order():
    ident = Config(X)
    eps = Config(C(W, X))
    const5 = Config(parse("5", M1))
    assert compare_configs(ident, eps) is Ordering.LESS
    assert compare_configs(const5, ident) is Ordering.LESS
    assert compare_configs(ident, Config(W)) is Ordering.LESS


def test_nonstandard_input_rejected():
    with pytest.raises(NotationError):
        cfg("C(W,C(0,0))", "0")


def test_collapse_configuration():
    assert config_of_collapse(ZERO, M1) is None
    assert config_of_collapse(parse("C(W,0)", M1), M1).body is W


@given(standard_term("main:1", 9), standard_term("main:1", 9))
def test_hole_appears_exactly_from_the_bound_up_to_omega(a, b):
    from ordnota import compare
    c = reflection_config(a, b, M1)
    if compare(a, b, M1) is Ordering.LESS:
        assert c.is_constant and c.body is a
    elif compare(a, W, M1) is Ordering.LESS:
        assert not c.is_constant


@given(standard_term("main:1", 9))
def test_finitely_many_configurations(a):
    from conftest import standard_terms
    from ordnota import compare
    bodies = {reflection_config(a, b, M1).body for b in standard_terms("main:1", 9)
              if compare(b, a, M1) is not Ordering.GREATER}
    assert len(bodies) <= a.size * 2 + 1
