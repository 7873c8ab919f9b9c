"""Immutable, hash-consed terms of the collapsing-function notation.

A term is the constant ``0``, a member ``W_i`` of the Omega family, an
opaque external constant ``$k`` (used when a system is built above an
ordinal), a hole ``x`` (only inside reflection configurations), or a node
``C(...)`` with two or three arguments.

Every term is interned, so structural equality coincides with identity and
hashing is cheap.  Each term caches its postfix token sequence; lexicographic
comparison of those sequences is the comparison used by most systems.
"""
from __future__ import annotations

from typing import Iterator, Sequence, Tuple

ZERO_KIND = 0
OMEGA_KIND = 1
CONST_KIND = 2
HOLE_KIND = 3
NODE_KIND = 4

# Postfix token codes.  'C' < '0' < constants (by rank) < holes < W_1 < W_2 ...
TOK_C = 0
TOK_ZERO = 1
TOK_CONST = 10
TOK_HOLE = 1_000_000
TOK_OMEGA = 2_000_000

Path = Tuple[int, ...]


class Term:
    """A node in the term algebra.  Build terms with the module factories."""

    __slots__ = ("kind", "index", "args", "tokens", "size", "_hash", "__weakref__")

    _table: dict = {}

    kind: int
    index: int
    args: Tuple["Term", ...]
    tokens: Tuple[int, ...]
    size: int

    def __new__(cls, kind: int, index: int = 0, args: Tuple["Term", ...] = ()):
        key = (kind, index, args)
        found = cls._table.get(key)
        if found is not None:
            return found
        self = object.__new__(cls)
        put = object.__setattr__
        put(self, "kind", kind)
        put(self, "index", index)
        put(self, "args", args)
        if kind == NODE_KIND:
            if len(args) == 2:
                a, b = args
                put(self, "tokens", b.tokens + a.tokens + (TOK_C,))
            else:
                i, a, b = args
                put(self, "tokens", b.tokens + i.tokens + a.tokens + (TOK_C,))
            put(self, "size", 1 + sum(x.size for x in args))
        else:
            if kind == ZERO_KIND:
                tok = TOK_ZERO
            elif kind == OMEGA_KIND:
                tok = TOK_OMEGA + index
            elif kind == CONST_KIND:
                tok = TOK_CONST + index
            else:
                tok = TOK_HOLE + index
            put(self, "tokens", (tok,))
            put(self, "size", 1)
        put(self, "_hash", hash(key))
        cls._table[key] = self
        return self

    def __setattr__(self, name, value):
        raise AttributeError("terms are immutable")

    def __hash__(self) -> int:
        return self._hash

    def __eq__(self, other) -> bool:
        return self is other

    def __ne__(self, other) -> bool:
        return self is not other

    def __reduce__(self):
        return (Term, (self.kind, self.index, self.args))

    def __repr__(self) -> str:
        return f"Term({render(self)!r})"

    def __str__(self) -> str:
        return render(self)

    @property
    def is_zero(self) -> bool:
        return self.kind == ZERO_KIND

    @property
    def is_omega(self) -> bool:
        return self.kind == OMEGA_KIND

    @property
    def is_const(self) -> bool:
        return self.kind == CONST_KIND

    @property
    def is_hole(self) -> bool:
        return self.kind == HOLE_KIND

    @property
    def is_node(self) -> bool:
        return self.kind == NODE_KIND

    @property
    def arity(self) -> int:
        return len(self.args)


ZERO = Term(ZERO_KIND)


def omega(index: int = 1) -> Term:
    if index < 0:
        raise ValueError("Omega index must be non-negative")
    return Term(OMEGA_KIND, index)


def const(rank: int) -> Term:
    if rank < 0:
        raise ValueError("constant rank must be non-negative")
    return Term(CONST_KIND, rank)


def hole(index: int = -1) -> Term:
    """The configuration variable ``x`` (index -1) or an auxiliary ``x_k``."""
    return Term(HOLE_KIND, index)


X = hole()


def C(*args: Term) -> Term:
    if len(args) not in (2, 3):
        raise ValueError(f"C takes 2 or 3 arguments, got {len(args)}")
    for a in args:
        if not isinstance(a, Term):
            raise TypeError(f"C arguments must be terms, got {type(a).__name__}")
    return Term(NODE_KIND, 0, tuple(args))


W = omega(1)


def _leaf_text(t: Term) -> str:
    if t.kind == ZERO_KIND:
        return "0"
    if t.kind == OMEGA_KIND:
        return "W" if t.index == 1 else f"W_{t.index}"
    if t.kind == CONST_KIND:
        return f"${t.index}"
    return "x" if t.index < 0 else f"x{t.index}"


def render(t: Term, style: str = "prefix") -> str:
    """Render ``t`` as re-parseable prefix text or space-separated postfix."""
    if style == "prefix":
        if t.kind != NODE_KIND:
            return _leaf_text(t)
        return "C(" + ",".join(render(a) for a in t.args) + ")"
    if style == "postfix":
        return " ".join(postfix_tokens(t))
    raise ValueError(f"unknown render style {style!r}")


def postfix_tokens(t: Term) -> list:
    out = []

    def walk(s: Term) -> None:
        if s.kind != NODE_KIND:
            out.append(_leaf_text(s))
            return
        if len(s.args) == 2:
            walk(s.args[1])
            walk(s.args[0])
        else:
            walk(s.args[2])
            walk(s.args[0])
            walk(s.args[1])
        out.append("C")

    walk(t)
    return out


def subterms(t: Term) -> list:
    """All positions of ``t`` as ``(path, subterm)``, root first, children left to right."""
    out = []
    stack = [((), t)]
    while stack:
        path, s = stack.pop()
        out.append((path, s))
        for i in range(len(s.args) - 1, -1, -1):
            stack.append((path + (i,), s.args[i]))
    return out


def at(t: Term, path: Sequence[int]) -> Term:
    for i in path:
        if i >= len(t.args) or i < 0:
            raise IndexError(f"invalid path {tuple(path)} for {render(t)}")
        t = t.args[i]
    return t


def replace_at(t: Term, path: Sequence[int], s: Term) -> Term:
    """Return ``t`` with the subterm at ``path`` replaced by ``s``."""
    if not path:
        return s
    i = path[0]
    if i < 0 or i >= len(t.args):
        raise IndexError(f"invalid path {tuple(path)} for {render(t)}")
    args = list(t.args)
    args[i] = replace_at(t.args[i], path[1:], s)
    return Term(NODE_KIND, 0, tuple(args))


def depth(t: Term) -> int:
    if t.kind != NODE_KIND:
        return 0
    return 1 + max(depth(a) for a in t.args)


def omega_indices(t: Term) -> set:
    return {s.index for _, s in subterms(t) if s.kind == OMEGA_KIND}


def iter_leaves(t: Term) -> Iterator[Term]:
    for _, s in subterms(t):
        if s.kind != NODE_KIND:
            yield s


class TreeIndex:
    """Preorder arrays for a term: node list, parents and subtree extents.

    Positions are integers in preorder, so the subtree of position ``j``
    occupies ``range(j, end[j])``.  ``paths[j]`` is the child-index path.
    """

    __slots__ = ("nodes", "parent", "end", "paths", "child_index")

    def __init__(self, t: Term):
        self.nodes = []
        self.parent = []
        self.end = []
        self.paths = []
        self.child_index = []
        self._build(t, -1, (), -1)

    def _build(self, t: Term, parent: int, path: Path, ci: int) -> None:
        j = len(self.nodes)
        self.nodes.append(t)
        self.parent.append(parent)
        self.end.append(0)
        self.paths.append(path)
        self.child_index.append(ci)
        for i, a in enumerate(t.args):
            self._build(a, j, path + (i,), i)
        self.end[j] = len(self.nodes)

    def __len__(self) -> int:
        return len(self.nodes)

    def is_ancestor(self, z: int, y: int) -> bool:
        """True iff position ``z`` is an ancestor of, or equal to, ``y``."""
        return z <= y < self.end[z]

    def rl_preorder(self, root: int = 0) -> list:
        """Right-to-left preorder of the subtree at ``root``: node, then children right to left."""
        out = []
        stack = [root]
        while stack:
            j = stack.pop()
            out.append(j)
            kids = self.children(j)
            stack.extend(kids)
        return out

    def children(self, j: int) -> list:
        kids = []
        k = j + 1
        while k < self.end[j]:
            kids.append(k)
            k = self.end[k]
        return kids
