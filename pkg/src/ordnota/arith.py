"""Ordinal arithmetic inside the term algebra and the one-variable C1 layer.

A term is read as a Cantor normal form ``w^e1 + w^e2 + ...`` (nonincreasing
exponents).  A node ``C(e, d)`` with ``C(e, d) >= e`` is ``d + w^e``; a
collapsed node (``C(e, d) < e``), the Omega constants and the opaque
constants are fixed points of ``x -> w^x`` and are their own exponent.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import List, Tuple

from . import frame, standard
from .systems import NotationError, SystemSpec
from .terms import NODE_KIND, ZERO, ZERO_KIND, C, Term, render


class InexpressibleError(NotationError, ValueError):
    pass


@dataclass(frozen=True)
class CnfView:
    """``t = C(e_1, C(e_2, ... C(e_n, base)))`` with ``exponents = [e_n, ..., e_1]``."""

    base: Term
    exponents: Tuple[Term, ...]

    def recompose(self, arity: int = 2) -> Term:
        t = self.base
        for e in self.exponents:
            t = _mk(e, t, arity)
        return t


def _mk(e: Term, acc: Term, arity: int) -> Term:
    return C(e, acc) if arity == 2 else C(ZERO, e, acc)


def _degree(t: Term, arity: int):
    """The exponent slot of a base-chain node, or None if ``t`` is not such a node."""
    if t.kind != NODE_KIND:
        return None
    if arity == 2:
        return t.args[0]
    if t.args[0].kind == ZERO_KIND:
        return t.args[1]
    return None


def cnf_view(t: Term, spec: SystemSpec) -> CnfView:
    """Follow the chain of bases down to a non-chain term; exponents innermost first."""
    exps: List[Term] = []
    while True:
        e = _degree(t, spec.arity)
        if e is None:
            break
        exps.append(e)
        t = t.args[-1]
    return CnfView(t, tuple(reversed(exps)))


def _self_exponent(t: Term, spec: SystemSpec) -> bool:
    if t.kind == ZERO_KIND:
        return False
    e = _degree(t, spec.arity)
    if e is None:
        return True
    return frame.cmp_fn(spec)(t, e) < 0


def exponents(t: Term, spec: SystemSpec) -> List[Term]:
    """Cantor normal form exponents of ``t``, largest first."""
    if t.kind == ZERO_KIND:
        return []
    if _self_exponent(t, spec):
        return [t]
    e = _degree(t, spec.arity)
    return _merge(exponents(t.args[-1], spec), [e], spec)


def _merge(xs: List[Term], ys: List[Term], spec: SystemSpec) -> List[Term]:
    if not ys:
        return list(xs)
    cmp = frame.cmp_fn(spec)
    head = ys[0]
    keep = list(xs)
    while keep and cmp(keep[-1], head) < 0:
        keep.pop()
    return keep + list(ys)


def _leading_principal(e: Term, spec: SystemSpec):
    """Largest fixed point of ``x -> w^x`` reached by following leading exponents of ``e``."""
    seen = 0
    while e.kind != ZERO_KIND and seen < 10_000:
        if _self_exponent(e, spec):
            return e
        e = exponents(e, spec)[0]
        seen += 1
    return None


def _omega_term(e: Term, spec: SystemSpec) -> Term:
    if _self_exponent(e, spec):
        return e
    base = _leading_principal(e, spec)
    return _mk(e, base if base is not None else ZERO, spec.arity)


def _finish(t: Term, spec: SystemSpec) -> Term:
    if standard.explain(t, spec) is None:
        return t
    try:
        return standard.normalize(t, spec)
    except standard.NotStandardizable as exc:
        raise InexpressibleError(f"{render(t)} has no standard form in {spec.name}") from exc


def from_exponents(exps: List[Term], spec: SystemSpec) -> Term:
    """Build ``w^e1 + w^e2 + ...`` (exponents nonincreasing)."""
    acc = ZERO
    for e in exps:
        acc = _omega_term(e, spec) if acc is ZERO else _mk(e, acc, spec.arity)
    return _finish(acc, spec)


def add(x: Term, y: Term, spec: SystemSpec) -> Term:
    """Ordinal sum ``x + y``: smaller trailing exponents of ``x`` are absorbed."""
    if y is ZERO:
        return x
    if x is ZERO:
        return y
    return from_exponents(_merge(exponents(x, spec), exponents(y, spec), spec), spec)


def omega_pow(a: Term, spec: SystemSpec) -> Term:
    """``w^a``; fixed points of ``x -> w^x`` are returned unchanged."""
    return from_exponents([a], spec)


def nat(k: int, spec: SystemSpec) -> Term:
    if k < 0:
        raise ValueError("natural numbers only")
    return from_exponents([ZERO] * k, spec)


def mul_nat(t: Term, k: int, spec: SystemSpec) -> Term:
    """``t * k`` as a k-fold sum."""
    if k < 0:
        raise ValueError("natural numbers only")
    out = ZERO
    for _ in range(k):
        out = add(out, t, spec)
    return out


def expand_repeat(k: int, a: Term, b: Term) -> Term:
    """``C(a, C(a, ... C(a, b)))`` with ``k`` copies of ``a``."""
    if k < 1:
        raise ValueError("repetition count must be positive")
    for _ in range(k):
        b = C(a, b)
    return b


def c1_eval(a: Term, b: Term, spec: SystemSpec) -> Term:
    """One-variable ``C1(a, b)``: apply ``C(e, .)`` for each CNF exponent of ``a``, largest first.

    Stops at the first exponent that is not maximal, where the value is the
    standard form of that single ``C(e, acc)``.
    """
    acc = b
    for e in exponents(a, spec):
        cand = frame.minimize_base(_mk(e, acc, spec.arity), spec)
        if standard.explain(cand, spec) is not None:
            return standard.normalize(cand, spec)
        acc = cand
    return acc


def _sum_text(exps: List[Term], spec: SystemSpec) -> str:
    parts = []
    i = 0
    cmp = frame.cmp_fn(spec)
    while i < len(exps):
        j = i
        while j < len(exps) and cmp(exps[j], exps[i]) == 0:
            j += 1
        e, k = exps[i], j - i
        if e is ZERO:
            parts.append(str(k))
            i = j
            continue
        # w^e = e for epsilon numbers
        if _self_exponent(e, spec):
            head = to_c1_text(e, spec)
        else:
            inner = to_c1_text(e, spec)
            head = f"w^{inner}" if inner.isalnum() else f"w^({inner})"
        parts.append(head if k == 1 else f"{head}*{k}")
        i = j
    return " + ".join(parts)


def to_c1_text(t: Term, spec: SystemSpec) -> str:
    """Readable rendering: Cantor normal form sums, with ``C1(...)`` for epsilon numbers."""
    if t.kind != NODE_KIND:
        return render(t)
    if _degree(t, spec.arity) is None:
        # a three-argument node with nonzero index
        return "C(" + ",".join(to_c1_text(a, spec) for a in t.args) + ")"
    if not _self_exponent(t, spec):
        return _sum_text(exponents(t, spec), spec)
    view = cnf_view(t, spec)
    body = _sum_text(list(view.exponents), spec)
    if view.base is ZERO:
        return f"C1({body})"
    return f"C1({body}, {to_c1_text(view.base, spec)})"
