import json

import pytest

from ordnota import C, ZERO, compare, explain, parse, parse_system, render
from ordnota.harness import (
    EncodingUndefined, audit_order, collapse_omegas, differential, dor_pass_broken, encode_cpass,
    enumerate_standard, format_matrix, random_term, search_descending, sort_terms, suffix_completions,
)
from ordnota.systems import SHIPPED, Ordering
from conftest import standard_terms

M1 = parse_system("main:1")


def test_level_zero_enumeration_start():
    terms = enumerate_standard(parse_system("main:0"), 5).terms
    assert [render(t) for t in terms[:3]] == ["0", "C(0,0)", "C(0,C(0,0))"]


def test_budget_one_is_leaves():
    assert enumerate_standard(parse_system("main:1+2"), 1).terms == tuple(
        parse(x, "main:1+2") for x in ("0", "$0", "$1", "W"))
    assert enumerate_standard(parse_system("dri"), 1).terms == (ZERO,)


def test_counts_are_frozen():
    assert len(standard_terms("main:1", 9)) == 233
    assert len(standard_terms("main:2", 9)) == 277
    assert len(standard_terms("dri", 13)) == 53


@pytest.mark.parametrize("system", ["main:1", "main:2", "dor", "cpass", "combined"])
def test_pruned_matches_generate_and_filter(system):
    sp = parse_system(system)
    size = 13 if sp.arity == 3 else 7
    assert enumerate_standard(sp, size).terms == enumerate_standard(sp, size, pruned=False).terms


def test_enumeration_is_a_prefix_as_budget_grows():
    small = enumerate_standard(M1, 7).terms
    big = enumerate_standard(M1, 9).terms
    target = parse("C(C(0,W),0)", M1)
    assert [t for t in big if t.size <= 7] == list(small)
    rank = small.index(target)
    assert rank == enumerate_standard(M1, 7).rank(target)


def test_below_filter():
    w = parse("C(W,0)", M1)
    out = enumerate_standard(M1, 7, below=w).terms
    assert out and all(compare(t, w, M1) is Ordering.LESS for t in out)


def test_report_json_is_deterministic():
    a = json.dumps(enumerate_standard(M1, 7).to_dict(), sort_keys=True)
    b = json.dumps(enumerate_standard(M1, 7).to_dict(), sort_keys=True)
    assert a == b
    assert "seconds" not in json.loads(a)


def test_random_terms_are_reproducible():
    assert random_term(M1, 1, 3) is random_term(M1, 1, 3)
    assert random_term(M1, 4, 1) in (ZERO, parse("W", M1))


def test_random_terms_standard_fraction():
    hits = sum(explain(random_term(M1, s, 7), M1) is None for s in range(400))
    assert hits / 400 >= 0.10


def test_audit_passes_on_enumerations():
    for spec in SHIPPED:
        size = 13 if spec.arity == 3 else 7
        reports = audit_order(spec, enumerate_standard(spec, size).terms, samples=2000)
        assert all(r.passed for r in reports), spec.name


def test_audit_empty_set():
    assert all(r.passed for r in audit_order(M1, []))


def test_audit_catches_a_bad_order():
    cyc = [parse(x, M1) for x in ("0", "C(0,0)", "W")]

    class Flipped:
        pass

    from ordnota import frame
    orig = frame.cmp_fn

    def fake(spec):
        base = orig(spec)
        return lambda s, t: -base(s, t) if {s, t} == {cyc[0], cyc[2]} else base(s, t)

    frame.cmp_fn = fake
    try:
        reports = {r.prop: r for r in audit_order(M1, cyc, samples=500)}
    finally:
        frame.cmp_fn = orig
    assert not reports["transitivity"].passed
    assert len(reports["transitivity"].counterexample) == 3


def test_differential_witnesses():
    assert differential("C(C(W+C(W*2,0),C(W*2,0)),0)", ["dor", "main:2"]) == {"dor": True, "main:2": False}
    assert differential("C(W + C(C(W,C(W*2,0)),C(W*2,0)), 0)", ["dor", "main:2"]) == {"dor": False, "main:2": True}
    assert differential("0", ["dor", "main:2", "cpass"]) == {"dor": True, "main:2": True, "cpass": True}
    assert differential("C(0,0)", ["cpass"]) == {"cpass": None}
    assert format_matrix({"dor": True, "main:2": False, "cpass": None}) == "dor\t✓\nmain:2\t✗\ncpass\tn/a"


def test_encoding_of_main_only_term():
    cp, m2 = parse_system("cpass"), parse_system("main:2")
    t = parse("C(1, C(0, C(2, C(1, C(1, 0, C(2,0,0)), 0), 0), C(2,0,0)), 0)", cp)
    want = parse("C(W + C(C(W*2 + C(W + C(W, C(W*2, 0)), 0), 0), C(W*2, 0)), 0)", m2)
    assert encode_cpass(t, m2) is want
    assert explain(want, m2) is None and explain(t, cp) is not None


def test_encoding_undefined_on_nonstandard_index():
    with pytest.raises(EncodingUndefined):
        encode_cpass(parse("C(C(0,1,1),0,0)", "cpass"), parse_system("dor-pass:full"))


def test_descent_search():
    rep = search_descending(dor_pass_broken(), budget=20_000)
    assert rep.found and len(rep.chain) >= 3
    for s, t in zip(rep.chain, rep.chain[1:]):
        assert compare(t, s, dor_pass_broken()) is Ordering.LESS
    assert not search_descending(M1, budget=0).found


@pytest.mark.parametrize("spec", SHIPPED, ids=lambda s: s.name)
def test_shipped_systems_show_no_descent(spec):
    assert not search_descending(spec, budget=5_000).found


def test_suffix_completions():
    t = parse("C(C(0,W),0)", M1)
    assert [render(s) for s in suffix_completions(t)] == ["C(C(0,W),0)"] * 3 + ["C(W,0)", "0"]


def test_collapse_omegas():
    assert collapse_omegas(parse("C(C(W_2,0),C(W_3,0))", "combined")) is parse("C(W_1,W_2)", "combined")


def test_sort_terms_matches_enumeration():
    terms = standard_terms("main:1", 7)
    assert tuple(sort_terms(reversed(terms), M1)) == terms
