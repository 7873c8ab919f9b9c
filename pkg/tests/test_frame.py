import pytest
from hypothesis import given

from ordnota import C, W, ZERO, compare, compare_postfix, compare_recursive, omega, parse, parse_system
from ordnota.frame import combined_level, minimize_base, to_single_omega
from ordnota.systems import Ordering
from strategies import standard_term

M1 = parse_system("main:1")


def cmp(a, b, system="main:1"):
    sp = parse_system(system)
    return compare(parse(a, sp), parse(b, sp), sp)


def test_collapse_of_zero_below_collapse_of_omega():
    for n in (1, 2, 3):
        assert cmp("C(C(0,0),0)", "C(W,0)", f"main:{n}") is Ordering.LESS


def test_proper_prefix_in_postfix_is_smaller():
    assert cmp("C(W,0)", "C(C(0,W),W)") is Ordering.LESS


def test_small_cases():
    assert cmp("C(0,0)", "C(W,0)") is Ordering.LESS
    assert cmp("0", "C(0,0)") is Ordering.LESS
    assert cmp("C(W,0)", "C(W,0)") is Ordering.EQUAL
    assert cmp("W", "C(C(W,W),0)") is Ordering.GREATER


def test_three_argument_order():
    assert cmp("C(0,0,0)", "C(C(0,0,0),0,0)", "dri") is Ordering.LESS
    assert cmp("C(1,C(1,0,0),0)", "C(1,C(0,C(1,0,0),0),0)", "dri") is Ordering.GREATER
    assert cmp("C(0,0,0)", "C(1,0,0)", "cpass") is Ordering.LESS


def test_to_single_omega():
    assert to_single_omega(omega(1), 2) is C(omega(2), ZERO)
    assert to_single_omega(omega(1), 1) is omega(1)
    assert to_single_omega(omega(1), 3) is C(C(omega(3), ZERO), ZERO)
    with pytest.raises(ValueError):
        to_single_omega(omega(3), 2)


def test_combined_level():
    assert combined_level(ZERO) == 1
    assert combined_level(omega(2), omega(3)) == 3


def test_minimize_base():
    assert minimize_base(C(W, C(ZERO, ZERO)), M1) is C(W, ZERO)


@given(standard_term("main:2", 9), standard_term("main:2", 9))
def test_postfix_agrees_with_recursive(a, b):
    sp = parse_system("main:2")
    assert compare_postfix(a, b, sp) == compare_recursive(a, b, sp)


@given(standard_term("main:1", 9), standard_term("main:1", 9))
def test_compare_is_antisymmetric(a, b):
    assert compare(a, b, M1) == -compare(b, a, M1)


@given(standard_term("combined", 7), standard_term("combined", 7))
def test_combined_lift_does_not_change_order(a, b):
    sp = parse_system("combined")
    n = combined_level(a, b)
    lifted = [to_single_omega(x, n + 1) for x in (a, b)]
    want = compare(a, b, sp)
    assert (lifted[0].tokens > lifted[1].tokens) - (lifted[0].tokens < lifted[1].tokens) == want


@given(standard_term("main:1", 9))
def test_standard_node_exceeds_its_base(t):
    if t.is_node:
        assert compare(t, t.args[1], M1) is Ordering.GREATER
