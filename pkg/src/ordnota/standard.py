"""System dispatch for standardness, explanation and conversion to standard form."""
from __future__ import annotations

from typing import Optional, Tuple

from . import cpass, dor, dri, frame, main
from .systems import (
    BH,
    COMBINED,
    CPASS,
    DOR,
    DOR_PASS,
    DRI,
    MAIN,
    Diagnostic,
    NotationError,
    SystemSpec,
)
from .terms import Term


class NotStandardizable(NotationError):
    """The system has no conversion to standard form for this term."""


def explain(t: Term, spec: SystemSpec) -> Optional[Diagnostic]:
    """None if ``t`` is standard in ``spec``; otherwise the first failed condition."""
    s = spec.system
    if s == BH:
        return main.explain_bh(t, spec)
    if s in (MAIN, COMBINED):
        return main.explain_main(t, spec)
    if s in (DOR, DOR_PASS):
        return dor.explain_dor(t, spec)
    if s == DRI:
        return dri.explain_dri(t, spec)
    if s == CPASS:
        return cpass.explain_cpass(t, spec)
    raise ValueError(f"unknown system {s!r}")


def is_standard(t: Term, spec: SystemSpec) -> Tuple[bool, Optional[Diagnostic]]:
    d = explain(t, spec)
    return d is None, d


def normalize(t: Term, spec: SystemSpec) -> Term:
    """Convert ``t`` to standard form.

    Three-argument systems have no conversion procedure; for them the base
    is minimized and a nonstandard result raises :class:`NotStandardizable`.
    """
    s = spec.system
    if s in (BH, MAIN, COMBINED):
        out = main.normalize_main(t, spec)
    elif s in (DOR, DOR_PASS):
        out = dor.normalize_dor(t, spec)
    else:
        out = _minimize_everywhere(t, spec)
    d = explain(out, spec)
    if d is not None:
        raise NotStandardizable(f"{d.condition} at {list(d.path)}: {d.message}")
    return out


def _minimize_everywhere(t: Term, spec: SystemSpec) -> Term:
    if not t.args:
        return t
    inner = Term(t.kind, 0, tuple(_minimize_everywhere(a, spec) for a in t.args))
    return frame.minimize_base(inner, spec)
