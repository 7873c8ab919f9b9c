"""Enumeration, random generation, order audits, differential runs and descent search."""
from __future__ import annotations

import itertools
import random
import time
from dataclasses import dataclass
from functools import cmp_to_key
from typing import Dict, Iterable, List, Optional, Sequence, Tuple

from . import arith, frame, oracle, standard
from .parsing import parse
from .systems import COMBINED, DOR_PASS, NotationError, SystemSpec, parse_system
from .terms import NODE_KIND, OMEGA_KIND, ZERO, ZERO_KIND, C, Term, const, hole, omega, render


class EnumerationOverflow(RuntimeError):
    pass


# ---------------------------------------------------------------- enumeration

def leaves(spec: SystemSpec, omega_levels: int = 2) -> List[Term]:
    out = [ZERO]
    if spec.system == COMBINED:
        out += [omega(i) for i in range(1, omega_levels + 1)]
    elif spec.omega_index is not None:
        out.append(omega(spec.omega_index))
    out += [const(k) for k in range(spec.constants)]
    return out


def sort_terms(terms: Iterable[Term], spec: SystemSpec) -> List[Term]:
    terms = list(terms)
    if spec.arity == 3:
        return sorted(terms, key=cmp_to_key(frame._rec))
    if spec.system == COMBINED:
        n = frame.combined_level(*terms) if terms else 1
        return sorted(terms, key=lambda t: frame.to_single_omega(t, n).tokens)
    return sorted(terms, key=lambda t: t.tokens)


def _compositions(total: int, parts: int, by_size: Dict[int, List[Term]]):
    """Argument tuples whose sizes sum to ``total``."""
    if parts == 1:
        if total in by_size:
            for t in by_size[total]:
                yield (t,)
        return
    for first in sorted(by_size):
        if first >= total:
            break
        for t in by_size[first]:
            for rest in _compositions(total - first, parts - 1, by_size):
                yield (t,) + rest


@dataclass
class EnumReport:
    spec: SystemSpec
    max_symbols: int
    terms: Tuple[Term, ...]
    seconds: float
    values: Optional[Tuple] = None
    candidates: int = 0

    def rank(self, t: Term) -> int:
        return self.terms.index(t)

    def to_dict(self, timing: bool = False) -> dict:
        out = {
            "system": self.spec.name,
            "max_symbols": self.max_symbols,
            "count": len(self.terms),
            "candidates": self.candidates,
            "terms": [render(t) for t in self.terms],
        }
        if timing:
            out["seconds"] = round(self.seconds, 3)
        if self.values is not None:
            out["values"] = [oracle.to_text(v) for v in self.values]
        return out

    def to_text(self) -> str:
        return "\n".join(render(t) for t in self.terms)


def enumerate_standard(
    spec: SystemSpec,
    max_symbols: int,
    below: Optional[Term] = None,
    pruned: bool = True,
    omega_levels: int = 2,
    limit: int = 5_000_000,
) -> EnumReport:
    """Every standard term with at most ``max_symbols`` symbols, sorted by the system order.

    ``pruned`` builds nodes only from standard arguments, which loses nothing
    because every system requires standard arguments; ``pruned=False``
    generates every well-formed term and filters, for cross-checking.
    """
    if max_symbols < 1:
        raise ValueError("max_symbols must be at least 1")
    start = time.perf_counter()
    arity = spec.arity
    pool: Dict[int, List[Term]] = {1: leaves(spec, omega_levels)}
    keep: Dict[int, List[Term]] = {}
    candidates = 0
    for s in range(1, max_symbols + 1):
        if s > 1:
            pool[s] = []
            for args in _compositions(s - 1, arity, keep if pruned else pool):
                candidates += 1
                if candidates > limit:
                    raise EnumerationOverflow(f"more than {limit} candidates")
                pool[s].append(C(*args))
            if not pool[s]:
                del pool[s]
                continue
        keep[s] = [t for t in pool[s] if standard.explain(t, spec) is None]
    found = [t for s in sorted(keep) for t in keep[s]]
    if below is not None:
        cmp = frame.cmp_fn(spec)
        found = [t for t in found if cmp(t, below) < 0]
    ordered = sort_terms(found, spec)
    values = None
    if spec.system == "main" and spec.level == 0 and spec.constants == 0:
        values = tuple(main0_value(t) for t in ordered)
    return EnumReport(spec, max_symbols, tuple(ordered), time.perf_counter() - start, values, candidates)


def all_terms(spec: SystemSpec, max_symbols: int, standard_args: bool = False) -> List[Term]:
    """Every well-formed term up to ``max_symbols``, by size; optionally only nodes over standard arguments."""
    by_size: Dict[int, List[Term]] = {1: leaves(spec)}
    good: Dict[int, List[Term]] = {1: by_size[1]}
    for s in range(2, max_symbols + 1):
        made = [C(*args) for args in _compositions(s - 1, spec.arity, good if standard_args else by_size)]
        if made:
            by_size[s] = made
            if standard_args:
                good[s] = [t for t in made if standard.explain(t, spec) is None]
    return [t for s in sorted(by_size) for t in by_size[s]]


def main0_value(t: Term):
    """Ordinal of a standard level-0 term in the independent CNF calculator (Omega_0 is epsilon_0)."""
    if t.kind == ZERO_KIND:
        return oracle.ZERO
    if t.kind == OMEGA_KIND:
        return oracle.EPS0
    a, b = t.args
    return oracle.add(main0_value(b), oracle.omega_pow(main0_value(a)))


# ---------------------------------------------------------------- random terms

def random_term(spec: SystemSpec, seed: int, size: int) -> Term:
    """A well-formed term of about ``size`` symbols; deterministic in ``(seed, size)``."""
    rng = random.Random(f"{seed}/{size}/{spec.name}")
    lv = leaves(spec)
    arity = spec.arity

    def build(n: int) -> Term:
        if n <= arity:
            return rng.choice(lv)
        rest = n - 1
        cuts = sorted(rng.sample(range(1, rest), arity - 1)) if rest > arity else list(range(1, arity))
        sizes = [b - a for a, b in zip([0] + cuts, cuts + [rest])]
        return C(*(build(k) for k in sizes))

    return build(size)


# ---------------------------------------------------------------- order audit

@dataclass
class AuditReport:
    prop: str
    passed: bool
    trials: int
    seed: int
    counterexample: Tuple[Term, ...] = ()
    note: str = ""

    def to_dict(self) -> dict:
        return {
            "property": self.prop,
            "passed": self.passed,
            "trials": self.trials,
            "seed": self.seed,
            "counterexample": [render(t) for t in self.counterexample],
            "note": self.note,
        }

    def to_text(self) -> str:
        status = "pass" if self.passed else "FAIL"
        line = f"{self.prop}: {status} ({self.trials} trials, seed {self.seed})"
        if self.counterexample:
            line += " counterexample: " + " ; ".join(render(t) for t in self.counterexample)
        if self.note:
            line += f" [{self.note}]"
        return line


def audit_order(
    spec: SystemSpec,
    terms: Sequence[Term],
    seed: int = 0,
    samples: int = 100_000,
) -> List[AuditReport]:
    """Order axioms on ``terms`` plus postfix/recursive agreement for two-argument systems.

    Irreflexivity, antisymmetry and trichotomy are checked on every pair.
    Transitivity is checked exhaustively by confirming that the pairwise
    verdicts are exactly those of one linear arrangement, and additionally on
    ``samples`` random triples.
    """
    terms = list(dict.fromkeys(terms))
    n = len(terms)
    cmp = frame.cmp_fn(spec)
    if spec.system == COMBINED and terms:
        level = frame.combined_level(*terms)
        lifted = [frame.to_single_omega(t, level) for t in terms]
        keys = [t.tokens for t in lifted]
        cmp = None
    m = [[0] * n for _ in range(n)]
    for i in range(n):
        for j in range(n):
            if cmp is None:
                m[i][j] = (keys[i] > keys[j]) - (keys[i] < keys[j])
            else:
                m[i][j] = cmp(terms[i], terms[j])
    reports = []

    bad = next(((terms[i],) for i in range(n) if m[i][i] != 0), ())
    reports.append(AuditReport("irreflexivity", not bad, n, seed, bad))

    bad = next(((terms[i], terms[j]) for i in range(n) for j in range(i + 1, n) if m[i][j] != -m[j][i]), ())
    reports.append(AuditReport("antisymmetry", not bad, n * (n - 1) // 2, seed, bad))

    bad = next(((terms[i], terms[j]) for i in range(n) for j in range(i + 1, n) if m[i][j] == 0), ())
    reports.append(AuditReport("trichotomy", not bad, n * (n - 1) // 2, seed, bad))

    order = sorted(range(n), key=cmp_to_key(lambda i, j: m[i][j]))
    bad = ()
    for p in range(n):
        for q in range(p + 1, n):
            i, j = order[p], order[q]
            if m[i][j] != -1:
                bad = _find_cycle(m, terms) or (terms[i], terms[j])
                break
        if bad:
            break
    reports.append(AuditReport("transitivity", not bad, n * (n - 1) // 2, seed, bad, "exhaustive via linear arrangement"))

    rng = random.Random(seed)
    bad = ()
    trials = samples if n else 0
    for _ in range(trials):
        i, j, k = rng.randrange(n), rng.randrange(n), rng.randrange(n)
        if m[i][j] < 0 and m[j][k] < 0 and m[i][k] >= 0:
            bad = (terms[i], terms[j], terms[k])
            break
    reports.append(AuditReport("transitivity-sampled", not bad, trials, seed, bad))

    if spec.arity == 2:
        bad = ()
        pairs = 0
        for i in range(n):
            for j in range(n):
                pairs += 1
                if frame.compare_postfix(terms[i], terms[j], spec) != frame.compare_recursive(terms[i], terms[j], spec):
                    bad = (terms[i], terms[j])
                    break
            if bad:
                break
        reports.append(AuditReport("postfix-recursive-agreement", not bad, pairs, seed, bad))
    return reports


def _find_cycle(m, terms) -> Tuple[Term, ...]:
    n = len(terms)
    for i, j, k in itertools.permutations(range(n), 3):
        if m[i][j] < 0 and m[j][k] < 0 and m[i][k] >= 0:
            return terms[i], terms[j], terms[k]
    return ()


def compare_agreement(spec: SystemSpec, terms: Sequence[Term]) -> Tuple[int, Optional[Tuple[Term, Term]]]:
    """Number of ordered pairs checked and the first postfix/recursive disagreement."""
    pairs = 0
    for s in terms:
        for t in terms:
            pairs += 1
            if frame.compare_postfix(s, t, spec) != frame.compare_recursive(s, t, spec):
                return pairs, (s, t)
    return pairs, None


# ---------------------------------------------------------------- suffixes

def _prefix_seq(t: Term) -> List[Term]:
    """Prefix form as a list: ``None`` for each C, leaves as themselves."""
    out: List[Optional[Term]] = []

    def walk(s: Term) -> None:
        if s.kind == NODE_KIND:
            out.append(None)
            for a in s.args:
                walk(a)
        else:
            out.append(s)

    walk(t)
    return out


def _from_prefix(seq: Sequence[Optional[Term]], arity: int) -> Term:
    stack: List[Term] = []
    for tok in reversed(seq):
        if tok is None:
            args = stack[-arity:][::-1]
            del stack[-arity:]
            stack.append(C(*args))
        else:
            stack.append(tok)
    if len(stack) != 1:
        raise ValueError("token sequence is not a single term")
    return stack[0]


def suffix_completions(t: Term, arity: int = 2) -> List[Term]:
    """Each nonempty suffix of the prefix form, with enough C's prepended to be a term."""
    seq = _prefix_seq(t)
    out = []
    for k in range(len(seq)):
        rest = seq[k:]
        nodes = sum(tok is None for tok in rest)
        missing = (len(rest) - nodes - 1) // (arity - 1) - nodes
        out.append(_from_prefix([None] * missing + rest, arity))
    return out


def collapse_omegas(t: Term) -> Term:
    """Rewrite ``C(W_{i+1}, 0)`` to ``W_i`` bottom-up until nothing changes."""
    if t.kind != NODE_KIND:
        return t
    args = tuple(collapse_omegas(a) for a in t.args)
    if len(args) == 2 and args[1] is ZERO and args[0].kind == OMEGA_KIND and args[0].index > 1:
        return omega(args[0].index - 1)
    return C(*args)


# ---------------------------------------------------------------- differential

def differential(t, specs: Sequence) -> Dict[str, Optional[bool]]:
    """Standardness verdict per system; None where the term does not fit the system.

    ``t`` may be text, which is parsed separately under each system (so ``W``
    means that system's Omega), or a term.
    """
    out: Dict[str, Optional[bool]] = {}
    for spec in specs:
        if isinstance(spec, str):
            spec = parse_system(spec)
        try:
            term = parse(t, spec) if isinstance(t, str) else t
            out[spec.name] = standard.explain(term, spec) is None
        except (NotationError, ValueError):
            out[spec.name] = None
    return out


def format_matrix(verdicts: Dict[str, Optional[bool]]) -> str:
    marks = {True: "✓", False: "✗", None: "n/a"}
    return "\n".join(f"{name}\t{marks[v]}" for name, v in verdicts.items())


# ---------------------------------------------------------------- index encoding

def omega_times(e: Term, spec: SystemSpec) -> Term:
    """``W * e`` over the system's single Omega, using ``W * w^x = w^(W + x)``."""
    w = omega(spec.omega_index)
    return arith.from_exponents([arith.add(w, x, spec) for x in arith.exponents(e, spec)], spec)


class EncodingUndefined(NotationError, ValueError):
    pass


def encode_cpass(t: Term, target: SystemSpec) -> Term:
    """Map ``C(i, a, b)`` to ``C(W * i + a, b)`` in a single-Omega two-argument system.

    Nodes are assembled as is, so a nonstandard base stays visible.  Index
    and degree go through ordinal arithmetic, which only has a meaning for
    standard inputs, so a nonstandard index or degree raises EncodingUndefined.
    """
    if t.kind != NODE_KIND:
        return t
    i, a, b = (encode_cpass(x, target) for x in t.args)
    for part in (i, a):
        if standard.explain(part, target) is not None:
            raise EncodingUndefined(f"{render(part)} is not standard in {target.name}")
    return C(arith.add(omega_times(i, target), a, target), b)


# ---------------------------------------------------------------- descent search

@dataclass
class DescentReport:
    spec: SystemSpec
    chain: Optional[Tuple[Term, ...]]
    tried: int
    context: Optional[Term] = None

    @property
    def found(self) -> bool:
        return self.chain is not None

    def to_dict(self) -> dict:
        return {
            "system": self.spec.name,
            "found": self.found,
            "tried": self.tried,
            "context": render(self.context) if self.context is not None else None,
            "chain": [render(t) for t in self.chain] if self.chain else [],
        }

    def to_text(self) -> str:
        if not self.found:
            return f"{self.spec.name}: no descending chain ({self.tried} candidates)"
        lines = [f"{self.spec.name}: descending chain via context {render(self.context)}"]
        lines += [f"  {render(t)}" for t in self.chain]
        return "\n".join(lines)


_HOLE = hole(0)


def _contexts(spec: SystemSpec, side: Dict[int, List[Term]], max_size: int):
    """One-hole contexts of increasing size whose side arguments are standard."""
    by_size: Dict[int, List[Term]] = {1: [_HOLE]}
    for s in range(2, max_size + 1):
        made = []
        for pos in range(spec.arity):
            for hs in sorted(by_size):
                for h in by_size[hs]:
                    for args in _compositions(s - 1 - hs, spec.arity - 1, side):
                        made.append(C(*args[:pos], h, *args[pos:]))
        if made:
            by_size[s] = made
            yield from made


def _fill(ctx: Term, x: Term) -> Term:
    if ctx is _HOLE:
        return x
    if ctx.kind != NODE_KIND:
        return ctx
    return C(*(_fill(a, x) for a in ctx.args))


def search_descending(
    spec: SystemSpec,
    budget: int = 20_000,
    min_len: int = 6,
    pool_symbols: Optional[int] = None,
    context_symbols: Optional[int] = None,
) -> DescentReport:
    """Look for ``u > F(u) > F(F(u)) > ...`` with every iterate standard.

    ``F`` ranges over one-hole contexts with standard side arguments and
    ``u`` over small standard terms.  In a well-founded system the iterates of
    a context that descends once must eventually leave the standard terms, so
    a chain of ``min_len`` standard terms is reported as a finding.
    """
    if budget <= 0:
        return DescentReport(spec, None, 0)
    if pool_symbols is None:
        pool_symbols = 5 if spec.arity == 2 else 7
    if context_symbols is None:
        context_symbols = 11 if spec.arity == 2 else 15
    pool = enumerate_standard(spec, pool_symbols).terms
    side: Dict[int, List[Term]] = {}
    for t in pool:
        side.setdefault(t.size, []).append(t)
    cmp = frame.cmp_fn(spec)
    tried = 0
    for ctx in _contexts(spec, side, context_symbols):
        for u in pool:
            tried += 1
            if tried > budget:
                return DescentReport(spec, None, budget)
            chain = [u]
            while len(chain) < min_len:
                nxt = _fill(ctx, chain[-1])
                if cmp(nxt, chain[-1]) >= 0 or standard.explain(nxt, spec) is not None:
                    break
                chain.append(nxt)
            if len(chain) >= min_len:
                return DescentReport(spec, tuple(chain), tried, _fill(ctx, _HOLE))
    return DescentReport(spec, None, tried)


def dor_pass_broken() -> SystemSpec:
    return SystemSpec(DOR_PASS, passthrough="broken")


__all__ = [
    "EnumReport", "AuditReport", "DescentReport", "EnumerationOverflow",
    "leaves", "sort_terms", "enumerate_standard", "all_terms", "main0_value", "random_term",
    "audit_order", "compare_agreement", "suffix_completions", "collapse_omegas", "differential", "format_matrix",
    "omega_times", "encode_cpass", "EncodingUndefined", "search_descending", "dor_pass_broken",
]
