"""Reflection configurations: the shape ``Lx. A(x)`` of a term above a lower one."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional, Tuple

from . import frame, standard
from .systems import COMBINED, NotationError, Ordering, SystemSpec
from .terms import HOLE_KIND, NODE_KIND, OMEGA_KIND, ZERO_KIND, C, Term, X, omega, render

BELOW_OMEGA = "<W"
ABOVE_OMEGA = ">=W"
UNCONSTRAINED = "any"


@dataclass(frozen=True)
class Config:
    """``body`` with the hole ``x``; ``constants`` are the outermost subterms below the base."""

    body: Term
    domain: str = BELOW_OMEGA
    constants: Tuple[Term, ...] = ()

    def render(self) -> str:
        text = f"Lx. {render(self.body)}"
        if self.domain != UNCONSTRAINED:
            text += f" | x{self.domain}"
        return text

    def __str__(self) -> str:
        return self.render()

    @property
    def is_constant(self) -> bool:
        return not _has_hole(self.body)


def _has_hole(t: Term) -> bool:
    if t.kind == HOLE_KIND:
        return True
    return any(_has_hole(a) for a in t.args)


def reflection_config(a: Term, b: Term, spec: SystemSpec) -> Config:
    """Configuration of ``a`` above ``b``: subterms ``< b`` become constants,
    bases ``d < b`` of subterms ``C(c, d) > b`` are raised to ``b``, then ``b`` becomes ``x``."""
    for t in (a, b):
        d = standard.explain(t, spec)
        if d is not None:
            raise NotationError(f"{render(t)} is not standard: {d.message}")
    if spec.system == COMBINED:
        n = frame.combined_level(a, b)
        a, b = frame.to_single_omega(a, n), frame.to_single_omega(b, n)
        om = n
    else:
        om = spec.omega_index
    cmp = frame.cmp_fn(spec)
    consts = []

    def rec(t: Term) -> Term:
        c = cmp(t, b)
        if c == 0:
            return X
        if c < 0:
            consts.append(t)
            return t
        if t.kind != NODE_KIND:
            return t
        *head, d = t.args
        new_d = X if cmp(d, b) <= 0 else rec(d)
        return C(*(rec(h) for h in head), new_d)

    body = rec(a)
    if om is None:
        domain = UNCONSTRAINED
    else:
        domain = BELOW_OMEGA if cmp(b, omega(om)) < 0 else ABOVE_OMEGA
    seen = []
    for k in consts:
        if k not in seen:
            seen.append(k)
    return Config(body, domain, tuple(seen))


# token codes: C < 0 < constants < x_0 < x_1 < ... < x, with Omega placed by the domain
_C, _ZERO, _CONST, _OMEGA_LOW, _HOLE, _X, _OMEGA_HIGH = 0, 1, 10, 10_000, 20_000, 30_000, 40_000


def _codes(t: Term, omega_high: bool) -> list:
    out = []

    def walk(s: Term) -> None:
        if s.kind == NODE_KIND:
            for arg in (s.args[-1],) + s.args[:-1]:
                walk(arg)
            out.append(_C)
        elif s.kind == ZERO_KIND:
            out.append(_ZERO)
        elif s.kind == OMEGA_KIND:
            out.append((_OMEGA_HIGH if omega_high else _OMEGA_LOW) + s.index)
        elif s.kind == HOLE_KIND:
            out.append(_X if s.index < 0 else _HOLE + s.index)
        else:
            out.append(_CONST + s.index)

    walk(t)
    return out


def compare_configs(c1: Config, c2: Config) -> Ordering:
    """Postfix comparison with ``x`` above the constants and below the upper bound.

    Omega sits above ``x`` in a ``x<W`` configuration and below it otherwise,
    which is the primed-Omega convention for comparing across domains.
    """
    k1 = _codes(c1.body, c1.domain != ABOVE_OMEGA)
    k2 = _codes(c2.body, c2.domain != ABOVE_OMEGA)
    return Ordering((k1 > k2) - (k1 < k2))


def config_of_collapse(t: Term, spec: SystemSpec) -> Optional[Config]:
    """Configuration of the degree of a node above the node itself, or None for leaves."""
    if t.kind != NODE_KIND:
        return None
    return reflection_config(t.args[-2], t, spec)
