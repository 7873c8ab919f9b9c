"""Recursive-descent parser for the ASCII term syntax.

::

    sum   := prod ('+' prod)*
    prod  := unary ('*' nat)*
    unary := 'w^' unary | atom
    atom  := '0' | nat | 'W' | 'W_' nat | '$' nat | 'x' | '(' sum ')'
           | 'C' '(' sum (',' sum){1,2} ')'
           | 'C#' nat '(' sum ',' sum ')'
           | 'C1' '(' sum [',' sum] ')'

Sugar (``+``, ``*k``, ``w^``, numerals, ``C#k``, ``C1``) is evaluated on the
spot, so the result is always a pure term.  ``x`` is accepted only when
parsing reflection configurations.
"""
from __future__ import annotations

import re
from typing import Iterator, Optional, TextIO, Tuple

from . import arith
from .systems import COMBINED, NotationError, SystemSpec, parse_system
from .terms import X, ZERO, C, Term, const, hole, omega


class ParseError(NotationError, ValueError):
    """Malformed input; ``offset`` is the byte offset of the problem."""

    def __init__(self, message: str, offset: int, kind: str = "syntax"):
        super().__init__(f"{message} at offset {offset}")
        self.message = message
        self.offset = offset
        self.kind = kind


class _Sum(tuple):
    """Cantor normal form exponents not yet built into a term.

    Sugar is evaluated lazily so that partial sums such as ``1`` in ``$1 + 1``
    need not be standard on their own.
    """


class _Parser:
    def __init__(self, text: str, spec: SystemSpec, config: bool):
        self.text = text
        self.pos = 0
        self.spec = spec
        self.config = config

    # byte offsets are reported even for non-ASCII input
    def offset(self, pos: Optional[int] = None) -> int:
        return len(self.text[: self.pos if pos is None else pos].encode("utf-8"))

    def fail(self, message: str, kind: str = "syntax", pos: Optional[int] = None):
        raise ParseError(message, self.offset(pos), kind)

    def skip(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos].isspace():
            self.pos += 1

    def peek(self, s: str) -> bool:
        self.skip()
        return self.text.startswith(s, self.pos)

    def eat(self, s: str) -> bool:
        if self.peek(s):
            self.pos += len(s)
            return True
        return False

    def expect(self, s: str) -> None:
        if not self.eat(s):
            found = self.text[self.pos: self.pos + 1] or "end of input"
            self.fail(f"expected {s!r}, found {found!r}")

    def number(self) -> int:
        self.skip()
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if start == self.pos:
            self.fail("expected a number")
        return int(self.text[start: self.pos])

    def parse(self) -> Term:
        t = self.term()
        self.skip()
        if self.pos != len(self.text):
            self.fail(f"unexpected {self.text[self.pos]!r}")
        return t

    def term(self) -> Term:
        return self._term(self.sum())

    def _term(self, t) -> Term:
        if isinstance(t, _Sum):
            return self._arith(arith.from_exponents, list(t)) if t else ZERO
        return t

    def _exps(self, t) -> list:
        return list(t) if isinstance(t, _Sum) else arith.exponents(t, self.spec)

    def _add(self, x, y) -> _Sum:
        return _Sum(self._arith(arith._merge, self._exps(x), self._exps(y)))

    def sum(self):
        t = self.prod()
        while self.eat("+"):
            t = self._add(t, self.prod())
        return t

    def prod(self):
        t = self.unary()
        while self.eat("*"):
            k = self.number()
            out = _Sum()
            for _ in range(k):
                out = self._add(out, t)
            t = out
        return t

    def unary(self):
        if self.eat("w^"):
            return _Sum([self._term(self.unary())])
        return self.atom()

    def _arith(self, fn, *args):
        return fn(*args, self.spec)

    def atom(self) -> Term:
        self.skip()
        start = self.pos
        if self.pos >= len(self.text):
            self.fail("unexpected end of input")
        ch = self.text[self.pos]
        if ch == "(":
            self.pos += 1
            t = self.sum()
            self.expect(")")
            return t
        if ch.isdigit():
            return _Sum([ZERO] * self.number())
        if ch == "$":
            self.pos += 1
            k = self.number()
            if k >= self.spec.constants:
                self.fail(f"unknown constant ${k}", "unknown-constant", start)
            return const(k)
        if ch == "W":
            self.pos += 1
            if self.text.startswith("_", self.pos):
                self.pos += 1
                k = self.number()
            else:
                k = None
            return self._omega(k, start)
        if ch == "x":
            self.pos += 1
            if not self.config:
                self.fail("unknown constant 'x'", "unknown-constant", start)
            if self.pos < len(self.text) and self.text[self.pos].isdigit():
                return hole(self.number())
            return X
        if ch == "C":
            self.pos += 1
            if self.text.startswith("1", self.pos) and self.text.startswith("(", self._after_digit()):
                self.pos += 1
                return self.c1()
            if self.text.startswith("#", self.pos):
                self.pos += 1
                k = self.number()
                self.expect("(")
                a = self.term()
                self.expect(",")
                b = self.term()
                self.expect(")")
                if k < 1:
                    self.fail("repetition count must be positive", pos=start)
                if self.spec.arity != 2:
                    self.fail(f"{self.spec.name} terms use C with 3 arguments", "arity", start)
                return arith.expand_repeat(k, a, b)
            return self.node(start)
        self.fail(f"unexpected {ch!r}")

    def _after_digit(self) -> int:
        p = self.pos + 1
        while p < len(self.text) and self.text[p].isspace():
            p += 1
        return p

    def _omega(self, k: Optional[int], start: int) -> Term:
        spec = self.spec
        if not spec.has_omega:
            self.fail(f"{spec.name} has no Omega constant", "unknown-constant", start)
        if k is None:
            return omega(spec.omega_index if spec.omega_index is not None else 1)
        if spec.system == COMBINED:
            if k < 1:
                self.fail("Omega indices start at 1", "unknown-constant", start)
        elif k != spec.omega_index:
            self.fail(f"W_{k} is not a constant of {spec.name}", "unknown-constant", start)
        return omega(k)

    def node(self, start: int) -> Term:
        self.expect("(")
        args = [self.term()]
        while self.eat(","):
            args.append(self.term())
        self.expect(")")
        if len(args) not in (2, 3):
            self.fail(f"C takes 2 or 3 arguments, got {len(args)}", "arity", start)
        if len(args) != self.spec.arity:
            self.fail(
                f"{self.spec.name} terms use C with {self.spec.arity} arguments, got {len(args)}",
                "arity", start,
            )
        return C(*args)

    def c1(self) -> Term:
        self.expect("(")
        a = self.term()
        b = self.term() if self.eat(",") else ZERO
        self.expect(")")
        return arith.c1_eval(a, b, self.spec)


def parse(text: str, spec=None, config: bool = False) -> Term:
    """Parse ``text`` under ``spec`` (a :class:`SystemSpec` or selector string; default combined)."""
    if spec is None:
        spec = SystemSpec(COMBINED)
    elif isinstance(spec, str):
        spec = parse_system(spec)
    return _Parser(text, spec, config).parse()


_COMMENT = re.compile(r"(^|\s)#.*$")


def iter_lines(stream: TextIO) -> Iterator[Tuple[int, str]]:
    """Non-empty lines of a batch file with their line numbers.

    ``#`` starts a comment at the beginning of a line or after whitespace,
    so the ``C#k`` repetition sugar is left alone.
    """
    for no, line in enumerate(stream, 1):
        body = _COMMENT.sub("", line.rstrip("\n")).strip()
        if body:
            yield no, body
