"""Degrees of Reflection over a single Omega, with optional passthrough."""
from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Callable, Optional, Tuple

from . import frame
from .main import _Budget, base_below_pool, graft_left, leaf_diagnostic
from .systems import (
    BASE_NOT_MINIMAL,
    BFB_VIOLATION,
    PASS_BROKEN,
    PASS_FULL,
    PASS_NONE,
    Diagnostic,
    SystemSpec,
)
from .terms import NODE_KIND, C, Path, Term, TreeIndex, W

_OMEGA_TOKENS = W.tokens


@dataclass(frozen=True)
class PassRestriction:
    """Bound ``p(a, x)`` on passthrough: ``C(e, f)`` may pass through when ``e < p(a, x)``.

    ``bound`` returns None for "no passthrough at all".  ``allow_self``
    permits ``z = y`` and exists only to reproduce the known ill-founded rule.
    """

    name: str
    bound: Callable[[Term, Path], Optional[Term]]
    allow_self: bool = False


FULL = PassRestriction(PASS_FULL, lambda a, x: a)
NONE = PassRestriction(PASS_NONE, lambda a, x: None)
BROKEN = PassRestriction(PASS_BROKEN, lambda a, x: a, allow_self=True)

_BY_NAME = {r.name: r for r in (FULL, NONE, BROKEN)}


def restriction(spec_or_name) -> Optional[PassRestriction]:
    if isinstance(spec_or_name, SystemSpec):
        if spec_or_name.system != "dor-pass":
            return None
        spec_or_name = spec_or_name.passthrough
    return _BY_NAME[spec_or_name]


def _below_omega(t: Term) -> bool:
    return t.tokens < _OMEGA_TOKENS


def _passes(idx: TreeIndex, y: int, z: int, a: Term, x: int, rule: PassRestriction) -> bool:
    if z == y and not rule.allow_self:
        return False
    zt = idx.nodes[z]
    if zt.kind != NODE_KIND:
        return False
    p = rule.bound(a, idx.paths[x])
    if p is None or not zt.args[0].tokens < p.tokens:
        return False
    t = y
    while True:
        if idx.nodes[t].tokens < zt.tokens:
            return False
        if t == z:
            return True
        t = idx.parent[t]


def find_violation(a: Term, bound: Term, rule: Optional[PassRestriction] = None) -> Optional[Tuple[int, int, TreeIndex]]:
    """First violating ``(x, y)`` of the T_a condition, ``y`` in right-to-left preorder.

    For each ``y`` the reported ``x`` is its outermost violating ancestor.
    """
    idx = TreeIndex(a)
    for y in idx.rl_preorder():
        yt = idx.nodes[y]
        if not _below_omega(yt):
            continue
        ancestors = []
        k = idx.parent[y]
        while k != -1:
            ancestors.append(k)
            k = idx.parent[k]
        for x in reversed(ancestors):
            xt = idx.nodes[x]
            if not (xt.tokens < yt.tokens):
                continue
            if _ok(idx, x, y, a, bound, rule):
                continue
            return x, y, idx
    return None


def _ok(idx: TreeIndex, x: int, y: int, a: Term, bound: Term, rule) -> bool:
    z = y
    while z != -1:
        zt = idx.nodes[z]
        if _below_omega(zt):
            if z < x:  # z is a proper ancestor of x
                return True
            if zt.tokens < bound.tokens:
                return True
            if rule is not None and _passes(idx, y, z, a, x, rule):
                return True
        z = idx.parent[z]
    return False


@lru_cache(maxsize=1 << 18)
def _dor_explain(t: Term, rule_name: Optional[str], constants: int, spec: SystemSpec) -> Optional[Diagnostic]:
    if t.kind != NODE_KIND:
        return leaf_diagnostic(t, spec, lambda s: s.index == 1)
    a, b = t.args
    for i in (1, 0):
        d = _dor_explain(t.args[i], rule_name, constants, spec)
        if d is not None:
            return d.shifted((i,))
    if base_below_pool(b, spec):
        return Diagnostic("constant-misuse", (1,), "base is below the constants the system is built above")
    if b.kind == NODE_KIND and b.args[0].tokens < a.tokens:
        return Diagnostic(BASE_NOT_MINIMAL, (1,), "base C(c,d) has c < a; it can be replaced by d")
    rule = _BY_NAME[rule_name] if rule_name else None
    hit = find_violation(a, t, rule)
    if hit is not None:
        x, y, idx = hit
        return Diagnostic(
            BFB_VIOLATION, (0,) + idx.paths[y],
            "subterm x < y < W uses y without a shield below C(a,b)",
            ((0,) + idx.paths[x], (0,) + idx.paths[y]),
        )
    return None


def explain_dor(t: Term, spec: SystemSpec, rule: Optional[PassRestriction] = None) -> Optional[Diagnostic]:
    frame.check_term(t, spec)
    if rule is None:
        rule = restriction(spec)
    if rule is not None and rule.name not in _BY_NAME:
        return _explain_custom(t, spec, rule)
    return _dor_explain(t, rule.name if rule else None, spec.constants, spec)


def _explain_custom(t: Term, spec: SystemSpec, rule: PassRestriction) -> Optional[Diagnostic]:
    if t.kind != NODE_KIND:
        return leaf_diagnostic(t, spec, lambda s: s.index == 1)
    a, b = t.args
    for i in (1, 0):
        d = _explain_custom(t.args[i], spec, rule)
        if d is not None:
            return d.shifted((i,))
    if b.kind == NODE_KIND and b.args[0].tokens < a.tokens:
        return Diagnostic(BASE_NOT_MINIMAL, (1,), "base C(c,d) has c < a")
    hit = find_violation(a, t, rule)
    if hit is not None:
        x, y, idx = hit
        return Diagnostic(
            BFB_VIOLATION, (0,) + idx.paths[y], "T_a condition violated",
            ((0,) + idx.paths[x], (0,) + idx.paths[y]),
        )
    return None


def is_standard_dor(t: Term, spec: Optional[SystemSpec] = None) -> Tuple[bool, Optional[Diagnostic]]:
    spec = spec or SystemSpec("dor")
    d = explain_dor(t, spec)
    return d is None, d


def is_standard_dor_pass(t: Term, p: PassRestriction = FULL) -> Tuple[bool, Optional[Diagnostic]]:
    spec = SystemSpec("dor-pass", passthrough=p.name if p.name in _BY_NAME else PASS_FULL)
    d = explain_dor(t, spec, p)
    return d is None, d


def _normalize(t: Term, budget: _Budget, rule) -> Term:
    if t.kind != NODE_KIND:
        return t
    a = _normalize(t.args[0], budget, rule)
    b = _normalize(t.args[1], budget, rule)
    while True:
        budget.tick()
        while b.kind == NODE_KIND and b.args[0].tokens < a.tokens:
            b = b.args[1]
        cur = C(a, b)
        hit = find_violation(a, cur, rule)
        if hit is None:
            return cur
        _, y, idx = hit
        a = _normalize(graft_left(a, idx.paths[y], W), budget, rule)


def normalize_dor(t: Term, spec: Optional[SystemSpec] = None) -> Term:
    """Conversion to standard form: replace the first violating ``y`` by W and cut to its left."""
    spec = spec or SystemSpec("dor")
    frame.check_term(t, spec)
    return _normalize(t, _Budget(t), restriction(spec))


__all__ = [
    "PassRestriction", "FULL", "NONE", "BROKEN", "restriction", "find_violation",
    "explain_dor", "is_standard_dor", "is_standard_dor_pass", "normalize_dor",
]
