"""Degrees of recursive inaccessibility: terms ``C(a, b, c)``.

``(a, b)`` acts as a lexicographic degree and ``c`` as the base.  ``a`` is
always maximal; ``b`` is maximal in ``e = C(a, b, c)`` iff ``b`` is in
``H(b, e)``, where ``k`` is in ``H(b, e)`` iff ``k < e`` or ``k = C(g, h, i)``
with ``h`` maximal, ``i`` minimal, ``g, h, i`` in ``H(b, e)`` and ``h < b``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Tuple

from . import frame
from .main import base_below_pool, leaf_diagnostic
from .systems import (
    BASE_NOT_MINIMAL,
    BFB_VIOLATION,
    CONSTANT_MISUSE,
    DRI,
    Diagnostic,
    Ordering,
    SystemSpec,
)
from .terms import CONST_KIND, NODE_KIND, ZERO_KIND, Term

DRI_SPEC = SystemSpec(DRI)
_rec = frame._rec


def compare_dri(t1: Term, t2: Term) -> Ordering:
    return frame.compare_recursive(t1, t2, DRI_SPEC)


def _pair_le(s: Term, t: Term) -> bool:
    """``(s_0, s_1) <= (t_0, t_1)`` lexicographically."""
    c = _rec(s.args[0], t.args[0])
    return c < 0 or (c == 0 and _rec(s.args[1], t.args[1]) <= 0)


def base_minimal(t: Term) -> bool:
    c = t.args[2]
    if c.kind != NODE_KIND:
        return c.kind in (ZERO_KIND, CONST_KIND)
    return _pair_le(t, c)


class _HQuery:
    """One maximality query; memoizes H-membership for the duration of the query."""

    def __init__(self):
        self.memo = {}

    def in_h(self, k: Term, b: Term, e: Term) -> bool:
        key = (k, b, e)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        self.memo[key] = False  # cycles cannot occur; this only guards re-entry
        ok = self._in_h(k, b, e)
        self.memo[key] = ok
        return ok

    def _in_h(self, k: Term, b: Term, e: Term) -> bool:
        if _rec(k, e) < 0:
            return True
        if k.kind != NODE_KIND:
            return False
        g, h, i = k.args
        if _rec(h, b) >= 0:
            return False
        if not self.maximal(k) or not base_minimal(k):
            return False
        return self.in_h(g, b, e) and self.in_h(h, b, e) and self.in_h(i, b, e)

    def maximal(self, k: Term) -> bool:
        return self.in_h(k.args[1], k.args[1], k)


def in_H(k: Term, b: Term, e: Term) -> bool:
    """Membership of ``k`` in ``H(b, e)``."""
    return _HQuery().in_h(k, b, e)


def b_maximal(t: Term) -> bool:
    return _HQuery().maximal(t)


def b_maximal_alternative(t: Term) -> bool:
    """``b`` is representable over ordinals ``< t`` using only ordinals below ``b``.

    Positions below a parameter (a subterm ``< t``) are not inspected.
    """
    b = t.args[1]
    stack = [b]
    while stack:
        s = stack.pop()
        if _rec(s, t) < 0:
            continue
        if s is not b and _rec(s, b) >= 0:
            return False
        stack.extend(s.args)
    return True


@lru_cache(maxsize=1 << 18)
def _explain(t: Term, constants: int) -> Optional[Diagnostic]:
    spec = SystemSpec(DRI, constants=constants)
    if t.kind != NODE_KIND:
        return leaf_diagnostic(t, spec, lambda s: False)
    for i in (2, 1, 0):
        d = _explain(t.args[i], constants)
        if d is not None:
            return d.shifted((i,))
    if base_below_pool(t.args[2], spec):
        return Diagnostic(CONSTANT_MISUSE, (2,), "base is below the constants the system is built above")
    if not base_minimal(t):
        return Diagnostic(BASE_NOT_MINIMAL, (2,), "base C(d,e,f) has (d,e) < (a,b)")
    if not b_maximal(t):
        return Diagnostic(BFB_VIOLATION, (1,), "b is not in H(b, C(a,b,c))", ((1,),))
    return None


def explain_dri(t: Term, spec: SystemSpec = DRI_SPEC) -> Optional[Diagnostic]:
    frame.check_term(t, spec)
    return _explain(t, spec.constants)


def is_standard_dri(t: Term, spec: SystemSpec = DRI_SPEC) -> Tuple[bool, Optional[Diagnostic]]:
    d = explain_dri(t, spec)
    return d is None, d
