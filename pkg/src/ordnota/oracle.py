"""Independent Cantor-normal-form calculator below epsilon_1.

Written without reference to the term algebra so it can check it.  An
ordinal is either ``EPS0`` or a tuple of exponents (nonincreasing, each an
ordinal); ``()`` is zero.  ``EPS0`` is the only fixed point of ``x -> w^x``
in range, so the one-exponent tuple ``(EPS0,)`` never occurs.
"""
from __future__ import annotations

from functools import cmp_to_key, lru_cache
from typing import Dict, List, Tuple, Union

EPS0 = "e0"
Ord = Union[str, Tuple]

ZERO: Ord = ()
ONE: Ord = ((),)


def _exps(x: Ord) -> Tuple:
    return (EPS0,) if x == EPS0 else x


def cmp(x: Ord, y: Ord) -> int:
    if x == y:
        return 0
    xs, ys = _exps(x), _exps(y)
    for a, b in zip(xs, ys):
        c = cmp(a, b)
        if c:
            return c
    return (len(xs) > len(ys)) - (len(xs) < len(ys))


def _norm(exps: Tuple) -> Ord:
    return EPS0 if exps == (EPS0,) else exps


def add(x: Ord, y: Ord) -> Ord:
    xs, ys = _exps(x), _exps(y)
    if not ys:
        return x
    keep = [e for e in xs if cmp(e, ys[0]) >= 0]
    return _norm(tuple(keep) + ys)


def omega_pow(x: Ord) -> Ord:
    return EPS0 if x == EPS0 else (x,)


def nat(k: int) -> Ord:
    return ((),) * k


def size(x: Ord) -> int:
    """Symbols of the nested ``C`` spelling: one per exponent, plus the leaves.

    A leading ``EPS0`` summand is spelled as the bare constant, not as ``w^EPS0``.
    """
    if x == EPS0:
        return 1
    total = 1 + sum(1 + size(e) for e in x)
    return total - 2 if x and x[0] == EPS0 else total


def is_normal(x: Ord) -> bool:
    if x == EPS0:
        return True
    if x == (EPS0,):
        return False
    if any(not is_normal(e) for e in x):
        return False
    return all(cmp(x[i], x[i + 1]) >= 0 for i in range(len(x) - 1))


def generate(max_size: int, with_eps: bool = True) -> List[Ord]:
    """Every normal ordinal of at most ``max_size`` symbols, sorted."""
    by_size: Dict[int, List[Ord]] = {1: [ZERO] + ([EPS0] if with_eps else [])}

    @lru_cache(maxsize=None)
    def lists(budget: int, bound_key: int) -> Tuple[Tuple, ...]:
        # nonincreasing exponent lists costing exactly ``budget``, every entry <= pool[bound_key]
        if budget == 0:
            return ((),)
        out = []
        for k in range(bound_key + 1):
            e = pool[k]
            cost = 1 + size(e)
            if cost <= budget:
                for rest in lists(budget - cost, k):
                    out.append((e,) + rest)
        return tuple(out)

    pool: List[Ord] = []
    for s in range(2, max_size + 1):
        pool = sorted({o for n in range(1, s) for o in by_size.get(n, [])}, key=cmp_to_key(cmp))
        lists.cache_clear()
        found = [ls for ls in lists(s - 1, len(pool) - 1) if not ls or ls[0] != EPS0]
        if with_eps:
            found += [ls for ls in lists(s + 1, len(pool) - 1) if ls and ls[0] == EPS0 and ls != (EPS0,)]
        by_size[s] = found
    out = [o for n in sorted(by_size) for o in by_size[n]]
    return sorted(out, key=cmp_to_key(cmp))


def to_text(x: Ord) -> str:
    if x == EPS0:
        return "e0"
    if not x:
        return "0"
    parts = []
    i = 0
    while i < len(x):
        j = i
        while j < len(x) and x[j] == x[i]:
            j += 1
        e, k = x[i], j - i
        if e == EPS0:
            parts.append("e0" if k == 1 else f"e0*{k}")
        elif e == ():
            parts.append(str(k))
        else:
            head = "w" if e == ONE else f"w^({to_text(e)})"
            parts.append(head if k == 1 else f"{head}*{k}")
        i = j
    return "+".join(parts)
