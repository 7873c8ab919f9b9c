"""The n-th main system, the combined system and the Bachmann-Howard system.

``a <_0 X`` is ``a < X``; ``a <_{n+1} X`` holds when every position ``x`` of
``a`` with ``x > a`` lies inside (or is) some position ``y`` of ``a`` with
``y <_n X``.  All comparisons are postfix-lexicographic.
"""
from __future__ import annotations

from functools import lru_cache
from typing import List, Optional, Tuple

from . import frame
from .systems import (
    BASE_NOT_MINIMAL,
    BFB_VIOLATION,
    BH,
    COMBINED,
    CONSTANT_MISUSE,
    MAIN,
    OMEGA_NORMALIZATION,
    Diagnostic,
    NormalizationBudgetExceeded,
    SystemSpec,
)
from .terms import (
    CONST_KIND,
    HOLE_KIND,
    NODE_KIND,
    OMEGA_KIND,
    TOK_CONST,
    ZERO,
    ZERO_KIND,
    C,
    Path,
    Term,
    TreeIndex,
    at,
    omega,
    render,
    subterms,
)

StdResult = Tuple[bool, Optional[Diagnostic]]


@lru_cache(maxsize=1 << 18)
def _bfb(a: Term, bound: Term, n: int) -> bool:
    if n == 0:
        return a.tokens < bound.tokens
    if a.kind != NODE_KIND:
        return True
    idx = TreeIndex(a)
    top = a.tokens
    for j in range(1, len(idx)):
        if idx.nodes[j].tokens <= top:
            continue
        k = j
        while k != -1 and not _bfb(idx.nodes[k], bound, n - 1):
            k = idx.parent[k]
        if k == -1:
            return False
    return True


def n_built_from_below(a: Term, bound: Term, n: int, spec: Optional[SystemSpec] = None) -> bool:
    """Whether ``a`` is n-built from below from ``< bound``."""
    if n < 0:
        raise ValueError("level must be non-negative")
    if spec is not None and spec.system == COMBINED:
        top = frame.combined_level(a, bound)
        a, bound = frame.to_single_omega(a, top), frame.to_single_omega(bound, top)
    return _bfb(a, bound, n)


def violation_chain(a: Term, bound: Term, n: int) -> Optional[List[Path]]:
    """Paths of the first counterexample ``a < a_1 < ... < a_n`` (``a_n >= bound``).

    Each ``a_k`` is the first violator in right-to-left preorder inside
    ``a_{k-1}``.  Returns None when ``a`` is n-built from below from ``< bound``.
    """
    chain: List[Path] = []
    root = a
    prefix: Path = ()
    for level in range(n, 0, -1):
        idx = TreeIndex(root)
        found = None
        for j in idx.rl_preorder():
            if idx.nodes[j].tokens <= root.tokens:
                continue
            k = j
            while k != -1 and not _bfb(idx.nodes[k], bound, level - 1):
                k = idx.parent[k]
            if k == -1:
                found = j
                break
        if found is None:
            return None if not chain else chain
        prefix = prefix + idx.paths[found]
        chain.append(prefix)
        root = idx.nodes[found]
    if n == 0:
        return None if a.tokens < bound.tokens else [()]
    return chain


def _top_constant(spec: SystemSpec) -> Optional[Term]:
    if spec.constants <= 0:
        return None
    return Term(CONST_KIND, spec.constants - 1)


def leaf_diagnostic(t: Term, spec: SystemSpec, omega_ok) -> Optional[Diagnostic]:
    if t.kind == ZERO_KIND:
        return None
    if t.kind == CONST_KIND:
        if t.index < spec.constants:
            return None
        return Diagnostic(CONSTANT_MISUSE, (), f"constant ${t.index} is not in the pool")
    if t.kind == OMEGA_KIND and omega_ok(t):
        return None
    if t.kind == HOLE_KIND:
        return Diagnostic(CONSTANT_MISUSE, (), "the configuration variable is not a term")
    return Diagnostic(CONSTANT_MISUSE, (), f"{render(t)} is not a constant of {spec.name}")


def base_below_pool(b: Term, spec: SystemSpec) -> bool:
    """Built-above mode: a C-term needs its base at or above the top constant."""
    top = _top_constant(spec)
    if top is None:
        return False
    return frame.cmp_fn(spec)(b, top) < 0


def _main_explain(t: Term, n: int, spec: SystemSpec) -> Optional[Diagnostic]:
    if t.kind != NODE_KIND:
        return leaf_diagnostic(t, spec, lambda s: s.index == n)
    a, b = t.args
    for i in (1, 0):
        d = _main_cached(t.args[i], n, spec)
        if d is not None:
            return d.shifted((i,))
    if base_below_pool(b, spec):
        return Diagnostic(CONSTANT_MISUSE, (1,), "base is below the constants the system is built above")
    if b.kind == NODE_KIND and b.args[0].tokens < a.tokens:
        return Diagnostic(
            BASE_NOT_MINIMAL, (1,),
            "base C(c,d) has c < a; it can be replaced by d",
        )
    if not _bfb(a, t, n):
        chain = violation_chain(a, t, n) or []
        paths = tuple((0,) + p for p in chain)
        return Diagnostic(
            BFB_VIOLATION, paths[0] if paths else (0,),
            f"degree is not {n}-built from below from < C(a,b)",
            paths,
        )
    return None


_std_cache: dict = {}


def _main_cached(t: Term, n: int, spec: SystemSpec) -> Optional[Diagnostic]:
    key = (t, n, spec.constants)
    if key in _std_cache:
        return _std_cache[key]
    d = _main_explain(t, n, spec)
    if len(_std_cache) > 1 << 20:
        _std_cache.clear()
    _std_cache[key] = d
    return d


def explain_main(t: Term, spec: SystemSpec) -> Optional[Diagnostic]:
    """None if ``t`` is standard in ``spec`` (main or combined), else the first failure."""
    frame.check_term(t, spec)
    if spec.system == COMBINED:
        for path, s in _raw_omega_spellings(t):
            return Diagnostic(
                OMEGA_NORMALIZATION, path,
                f"C(W_{s.args[0].index},0) must be written as W_{s.args[0].index - 1}",
            )
        n = frame.combined_level(t)
        return _main_cached(frame.to_single_omega(t, n), n, spec)
    return _main_cached(t, spec.level, spec)


def _raw_omega_spellings(t: Term):
    for path, s in subterms(t):
        if (
            s.kind == NODE_KIND and len(s.args) == 2 and s.args[1] is ZERO
            and s.args[0].kind == OMEGA_KIND and s.args[0].index >= 2
        ):
            yield path, s


# --- Bachmann-Howard: written directly from "uses only ordinals below a" ------

_OMEGA1 = omega(1)


def _bh_uses_only_below(a: Term, bound: Term) -> Optional[Path]:
    """Walk the representation of ``a`` over ordinals ``< bound``; return a path using an ordinal above ``a``."""
    stack = [((), a)]
    while stack:
        path, s = stack.pop()
        if s.tokens < bound.tokens:
            continue  # a parameter, not parsed further
        if s.tokens > a.tokens:
            return path
        for i, child in enumerate(s.args):
            stack.append((path + (i,), child))
    return None


@lru_cache(maxsize=1 << 18)
def _bh_explain(t: Term, constants: int) -> Optional[Diagnostic]:
    if t.kind == ZERO_KIND or t is _OMEGA1:
        return None
    if t.kind == CONST_KIND and t.index < constants:
        return None
    if t.kind != NODE_KIND:
        return Diagnostic(CONSTANT_MISUSE, (), f"{render(t)} is not a Bachmann-Howard constant")
    a, b = t.args
    for i in (1, 0):
        d = _bh_explain(t.args[i], constants)
        if d is not None:
            return d.shifted((i,))
    if constants and b.tokens < (TOK_CONST + constants - 1,):
        return Diagnostic(CONSTANT_MISUSE, (1,), "base is below the constants the system is built above")
    if b.kind == NODE_KIND and b.args[0].tokens < a.tokens:
        return Diagnostic(BASE_NOT_MINIMAL, (1,), "base C(c,d) has c < a")
    bad = _bh_uses_only_below(a, t)
    if bad is not None:
        return Diagnostic(
            BFB_VIOLATION, (0,) + bad,
            "representation of a over ordinals < C(a,b) uses an ordinal above a",
            ((0,) + bad,),
        )
    return None


def explain_bh(t: Term, spec: SystemSpec) -> Optional[Diagnostic]:
    frame.check_term(t, spec)
    return _bh_explain(t, spec.constants)


# --- conversion to standard form ---------------------------------------------

def graft_left(t: Term, path: Path, s: Term) -> Term:
    """Put ``s`` at ``path`` and delete everything to its left (prefix order).

    Descending into a first argument keeps ``C(child, right)``; descending
    into the base drops that node together with its left part.
    """
    if not path:
        return s
    i = path[0]
    sub = graft_left(t.args[i], path[1:], s)
    if i == len(t.args) - 1:
        return sub
    return Term(NODE_KIND, 0, (sub,) + t.args[i + 1:])


class _Budget:
    __slots__ = ("left", "limit", "origin")

    def __init__(self, t: Term):
        self.limit = self.left = max(1, t.size) * 64
        self.origin = t

    def tick(self) -> None:
        self.left -= 1
        if self.left < 0:
            raise NormalizationBudgetExceeded(
                f"no standard form within {self.limit} steps for {render(self.origin)}"
            )


def _normalize_main(t: Term, n: int, budget: _Budget, spec: SystemSpec) -> Term:
    if t.kind != NODE_KIND:
        return t
    omega_n = omega(n)
    a = _normalize_main(t.args[0], n, budget, spec)
    b = _normalize_main(t.args[1], n, budget, spec)
    while True:
        budget.tick()
        while b.kind == NODE_KIND and b.args[0].tokens < a.tokens:
            b = b.args[1]
        cur = C(a, b)
        if _bfb(a, cur, n):
            return cur
        chain = violation_chain(a, cur, n)
        target = chain[-1]
        # climb to the enclosing C(a_n, d) that is below Omega_n
        path = target
        for cut in range(len(target) - 1, -1, -1):
            if at(a, target[:cut]).tokens < omega_n.tokens:
                path = target[:cut]
                break
        a = _normalize_main(graft_left(a, path, omega_n), n, budget, spec)


def normalize_main(t: Term, spec: SystemSpec) -> Term:
    """Conversion to standard form for the n-th, combined and Bachmann-Howard systems."""
    frame.check_term(t, spec)
    if spec.system == COMBINED:
        n = frame.combined_level(t)
        lifted = frame.to_single_omega(t, n)
        out = _normalize_main(lifted, n, _Budget(lifted), spec)
        return frame.from_single_omega(out)
    n = 1 if spec.system == BH else spec.level
    return _normalize_main(t, n, _Budget(t), spec)
