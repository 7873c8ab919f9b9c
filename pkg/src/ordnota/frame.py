"""Generic comparison, base minimization and Omega-family conversion."""
from __future__ import annotations

from functools import lru_cache

from .systems import (
    COMBINED,
    ArityError,
    NotationError,
    Ordering,
    SystemSpec,
)
from .terms import (
    CONST_KIND,
    HOLE_KIND,
    NODE_KIND,
    OMEGA_KIND,
    ZERO,
    C,
    Term,
    omega,
    omega_indices,
)

LESS, EQUAL, GREATER = Ordering.LESS, Ordering.EQUAL, Ordering.GREATER


class ConstantMisuse(NotationError, ValueError):
    pass


@lru_cache(maxsize=None)
def _arity_ok(t: Term, arity: int) -> bool:
    if t.kind != NODE_KIND:
        return True
    return len(t.args) == arity and all(_arity_ok(a, arity) for a in t.args)


@lru_cache(maxsize=None)
def _max_omega(t: Term) -> int:
    if t.kind == OMEGA_KIND:
        return t.index
    if t.kind == NODE_KIND:
        return max(_max_omega(a) for a in t.args)
    return -1


def check_term(t: Term, spec: SystemSpec) -> None:
    """Raise if ``t`` cannot belong to ``spec`` (wrong arity or foreign constants)."""
    if not _arity_ok(t, spec.arity):
        raise ArityError(f"{spec.name} terms use C with {spec.arity} arguments")
    top = _max_omega(t)
    if top >= 0:
        if not spec.has_omega:
            raise ConstantMisuse(f"{spec.name} has no Omega constant")
        idx = spec.omega_index
        if idx is None and 0 in omega_indices(t):
            raise ConstantMisuse("the combined system has no W_0")
        if idx is not None and omega_indices(t) != {idx}:
            raise ConstantMisuse(f"{spec.name} only has the Omega constant W_{idx}")


def _tokens_cmp(x: tuple, y: tuple) -> Ordering:
    if x == y:
        return EQUAL
    return LESS if x < y else GREATER


def to_single_omega(t: Term, n: int) -> Term:
    """Rewrite every ``W_i`` (i < n) as ``C(W_{i+1}, 0)`` until only ``W_n`` remains."""
    top = _max_omega(t)
    if top > n:
        raise ValueError(f"target level {n} is below Omega index {top} in the term")
    return _lift(t, n)


@lru_cache(maxsize=None)
def _lift(t: Term, n: int) -> Term:
    if t.kind == OMEGA_KIND:
        out = omega(n)
        for _ in range(n - t.index):
            out = C(out, ZERO)
        return out
    if t.kind == NODE_KIND:
        return Term(NODE_KIND, 0, tuple(_lift(a, n) for a in t.args))
    return t


@lru_cache(maxsize=None)
def from_single_omega(t: Term) -> Term:
    """Inverse of :func:`to_single_omega`: fold each ``C(W_{i+1}, 0)`` into ``W_i``."""
    if t.kind != NODE_KIND:
        return t
    args = tuple(from_single_omega(a) for a in t.args)
    if len(args) == 2 and args[1] is ZERO and args[0].kind == OMEGA_KIND and args[0].index >= 2:
        return omega(args[0].index - 1)
    return Term(NODE_KIND, 0, args)


def combined_level(*terms: Term) -> int:
    return max(1, max(_max_omega(t) for t in terms))


def compare_postfix(t1: Term, t2: Term, spec: SystemSpec) -> Ordering:
    """Lexicographic comparison of postfix token sequences (a proper prefix is smaller)."""
    check_term(t1, spec)
    check_term(t2, spec)
    if spec.system == COMBINED:
        n = combined_level(t1, t2)
        t1, t2 = _lift(t1, n), _lift(t2, n)
    return _tokens_cmp(t1.tokens, t2.tokens)


@lru_cache(maxsize=1 << 20)
def _rec(s: Term, t: Term) -> int:
    if s is t:
        return 0
    sk, tk = s.kind, t.kind
    if sk != NODE_KIND and tk != NODE_KIND:
        return -1 if s.tokens < t.tokens else (1 if s.tokens != t.tokens else 0)
    if sk != NODE_KIND:
        # a leaf is below C(c, d) exactly when it is at most d
        return -1 if _rec(s, t.args[-1]) <= 0 else 1
    if tk != NODE_KIND:
        return -_rec(t, s)
    if _less_nodes(s, t):
        return -1
    if _less_nodes(t, s):
        return 1
    # only reachable on nonstandard input; fall back to the token order
    return -1 if s.tokens < t.tokens else 1


def _pair_cmp(s: Term, t: Term) -> int:
    for x, y in zip(s.args[:-1], t.args[:-1]):
        c = _rec(x, y)
        if c:
            return c
    return 0


def _less_nodes(s: Term, t: Term) -> bool:
    if _rec(s, t.args[-1]) <= 0:
        return True
    if _rec(s.args[-1], t) >= 0:
        return False
    if len(s.args) == 2:
        return _rec(s.args[0], t.args[0]) < 0
    return _pair_cmp(s, t) < 0


def compare_recursive(t1: Term, t2: Term, spec: SystemSpec) -> Ordering:
    """Structural comparison: ``C(a,b) < C(c,d)`` iff ``C(a,b) <= d`` or ``b < C(c,d)`` and ``a < c``.

    For three-argument systems ``(a, b)`` of ``C(a, b, c)`` is compared as a
    lexicographic pair and ``c`` plays the role of the base.
    """
    check_term(t1, spec)
    check_term(t2, spec)
    if spec.system == COMBINED:
        n = combined_level(t1, t2)
        t1, t2 = _lift(t1, n), _lift(t2, n)
    return Ordering(_rec(t1, t2))


def compare(t1: Term, t2: Term, spec: SystemSpec) -> Ordering:
    """The system's comparison: structural for three-argument systems, postfix otherwise."""
    if spec.arity == 3:
        return compare_recursive(t1, t2, spec)
    return compare_postfix(t1, t2, spec)


def cmp_fn(spec: SystemSpec):
    """A fast unchecked ``(s, t) -> -1/0/1`` comparator for terms already known to fit ``spec``."""
    if spec.arity == 3:
        return _rec
    if spec.system == COMBINED:
        def f(s, t):
            n = combined_level(s, t)
            return _tokens_cmp(_lift(s, n).tokens, _lift(t, n).tokens)
        return f
    return lambda s, t: (s.tokens > t.tokens) - (s.tokens < t.tokens)


def minimize_base(t: Term, spec: SystemSpec) -> Term:
    """Apply ``C(x, C(y, z)) -> C(x, z)`` while ``y < x`` (pairwise for three arguments)."""
    if t.kind != NODE_KIND:
        return t
    check_term(t, spec)
    cmp = cmp_fn(spec)
    while True:
        b = t.args[-1]
        if b.kind != NODE_KIND:
            return t
        if len(t.args) == 2:
            smaller = cmp(b.args[0], t.args[0]) < 0
        else:
            c = cmp(b.args[0], t.args[0])
            smaller = c < 0 or (c == 0 and cmp(b.args[1], t.args[1]) < 0)
        if not smaller:
            return t
        t = Term(NODE_KIND, 0, t.args[:-1] + (b.args[-1],))


def is_leaf_constant(t: Term) -> bool:
    return t.kind in (CONST_KIND, OMEGA_KIND, HOLE_KIND)
