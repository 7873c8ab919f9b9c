"""The ``C_i(a, b)`` system: built from below with passthrough for lower indices.

Terms are ``C(i, a, b)``.  Every position ``x`` of ``a`` with ``x > a`` must
sit inside a position ``< C_i(a, b)``, or strictly inside some ``C_j(e, f)``
with ``j < i`` without an intervening subterm ``< C_j(e, f)``.
"""
from __future__ import annotations

from functools import lru_cache
from typing import Optional, Tuple

from . import frame
from .dri import base_minimal
from .main import base_below_pool, leaf_diagnostic
from .systems import (
    BASE_NOT_MINIMAL,
    BFB_VIOLATION,
    CONSTANT_MISUSE,
    CPASS,
    Diagnostic,
    Ordering,
    SystemSpec,
)
from .terms import NODE_KIND, Path, Term, TreeIndex

CPASS_SPEC = SystemSpec(CPASS)
_rec = frame._rec

# (shield, passthrough) variants: shield "lt" is  y < C_i(a,b), "le" is  y <= b;
# passthrough "lt" forbids t < C_j(e,f) on the path, "le" forbids t <= f.
VARIANTS = (("lt", "lt"), ("lt", "le"), ("le", "lt"), ("le", "le"))


def compare_cpass(t1: Term, t2: Term) -> Ordering:
    return frame.compare_recursive(t1, t2, CPASS_SPEC)


def _shielded(s: Term, whole: Term, mode: str) -> bool:
    if mode == "lt":
        return _rec(s, whole) < 0
    return _rec(s, whole.args[2]) <= 0


def _blocked(t: Term, z: Term, mode: str) -> bool:
    if mode == "lt":
        return _rec(t, z) < 0
    return _rec(t, z.args[2]) <= 0


def bfb_violation(part: Term, whole: Term, variant=("lt", "lt")) -> Optional[Path]:
    """First position of ``part`` that is neither shielded nor passed through.

    ``part`` is the degree (or, in augmented mode, the index) of ``whole``.
    """
    shield, through = variant
    i = whole.args[0]
    idx = TreeIndex(part)
    for x in idx.rl_preorder():
        xt = idx.nodes[x]
        if _rec(xt, part) <= 0:
            continue
        ok = False
        k = x
        while k != -1:
            if _shielded(idx.nodes[k], whole, shield):
                ok = True
                break
            k = idx.parent[k]
        if not ok:
            ok = _passthrough(idx, x, i, through)
        if not ok:
            return idx.paths[x]
    return None


def _passthrough(idx: TreeIndex, x: int, i: Term, mode: str) -> bool:
    # walk up from x; t ranges over x .. z (z exclusive) as z climbs
    path_terms = [idx.nodes[x]]
    z = idx.parent[x]
    while z != -1:
        zt = idx.nodes[z]
        if (
            zt.kind == NODE_KIND
            and _rec(zt.args[0], i) < 0
            and not any(_blocked(t, zt, mode) for t in path_terms)
        ):
            return True
        path_terms.append(zt)
        z = idx.parent[z]
    return False


def _augmented(spec_constants: int) -> bool:
    return spec_constants > 0


@lru_cache(maxsize=1 << 18)
def _explain(t: Term, constants: int, variant=("lt", "lt")) -> Optional[Diagnostic]:
    spec = SystemSpec(CPASS, constants=constants)
    if t.kind != NODE_KIND:
        return leaf_diagnostic(t, spec, lambda s: False)
    for k in (2, 1, 0):
        d = _explain(t.args[k], constants, variant)
        if d is not None:
            return d.shifted((k,))
    if base_below_pool(t.args[2], spec):
        return Diagnostic(CONSTANT_MISUSE, (2,), "base is below the constants the system is built above")
    if not base_minimal(t):
        return Diagnostic(BASE_NOT_MINIMAL, (2,), "base C_j(c,d) has (j,c) < (i,a)")
    bad = bfb_violation(t.args[1], t, variant)
    if bad is not None:
        return Diagnostic(
            BFB_VIOLATION, (1,) + bad,
            "degree uses a larger ordinal outside every shield and passthrough",
            ((1,) + bad,),
        )
    if _augmented(constants):
        bad = bfb_violation(t.args[0], t, variant)
        if bad is not None:
            return Diagnostic(
                BFB_VIOLATION, (0,) + bad,
                "index uses a larger ordinal outside every shield and passthrough",
                ((0,) + bad,),
            )
    return None


def explain_cpass(t: Term, spec: SystemSpec = CPASS_SPEC) -> Optional[Diagnostic]:
    frame.check_term(t, spec)
    return _explain(t, spec.constants)


def is_standard_cpass(t: Term, constants: int = 0) -> Tuple[bool, Optional[Diagnostic]]:
    d = explain_cpass(t, SystemSpec(CPASS, constants=constants))
    return d is None, d


def bound_equivalence_check(t: Term, constants: int = 0) -> bool:
    """True iff all four shield/passthrough bound variants agree on ``t``."""
    frame.check_term(t, SystemSpec(CPASS, constants=constants))
    verdicts = {_explain(t, constants, v) is None for v in VARIANTS}
    return len(verdicts) == 1

