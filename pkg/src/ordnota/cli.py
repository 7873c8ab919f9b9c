"""Command-line front end: ``ordnota <subcommand> [options] [terms...]``.

Results go to stdout, errors to stderr.  Exit status is 0 on success, 1 on
domain errors (for example a term that has no standard form, or a check that
found a violation) and 2 on usage or parse errors.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
import textwrap
from typing import Iterable, List, Optional, Sequence

from . import arith, frame, harness, standard
from .config import reflection_config
from .parsing import ParseError, iter_lines, parse
from .systems import COMBINED, Diagnostic, NotationError, SystemSpec, parse_system
from .terms import Term, render

EXIT_OK, EXIT_DOMAIN, EXIT_USAGE = 0, 1, 2
FORMATS = ("pretty", "postfix", "c1", "structured")


class DomainError(Exception):
    pass


def _width() -> Optional[int]:
    raw = os.environ.get("ORDNOTA_WIDTH")
    if not raw:
        return None
    try:
        return max(20, int(raw))
    except ValueError:
        return None


class Output:
    def __init__(self, fmt: str, spec: SystemSpec, out=None):
        self.fmt = fmt
        self.spec = spec
        self.out = out or sys.stdout

    def line(self, text: str) -> None:
        width = _width()
        if width and len(text) > width:
            text = textwrap.fill(text, width, break_long_words=True, subsequent_indent="  ")
        self.out.write(text + "\n")

    def json(self, obj) -> None:
        self.out.write(json.dumps(obj, ensure_ascii=False, sort_keys=True) + "\n")

    def term_text(self, t: Term) -> str:
        if self.fmt == "postfix":
            return render(t, "postfix")
        if self.fmt == "c1":
            return arith.to_c1_text(t, self.spec)
        return render(t)

    def term(self, t: Term, **extra) -> None:
        if self.fmt == "structured":
            self.json({"term": render(t), "postfix": render(t, "postfix"), **extra})
        else:
            self.line(self.term_text(t))


def _diag_text(d: Diagnostic) -> str:
    path = ".".join(str(i) for i in d.path) or "root"
    text = f"{d.condition} at {path}: {d.message}"
    if d.witnesses:
        text += " (witnesses: " + ", ".join(".".join(map(str, w)) or "root" for w in d.witnesses) + ")"
    return text


# ------------------------------------------------------------------ inputs

def _inputs(args) -> List[str]:
    if args.terms:
        return list(args.terms)
    if args.file:
        with open(args.file, encoding="utf-8") as fh:
            return [body for _, body in iter_lines(fh)]
    return [body for _, body in iter_lines(sys.stdin)]


def _pairs(args) -> List[Sequence[str]]:
    if args.terms:
        if len(args.terms) != 2:
            raise ParseError("expected exactly two terms", 0, "usage")
        return [args.terms]
    out = []
    for line in _inputs(args):
        parts = [p.strip() for p in line.split(";")]
        if len(parts) != 2:
            raise ParseError("batch lines must hold two terms separated by ';'", 0, "usage")
        out.append(parts)
    return out


# ------------------------------------------------------------------ commands

def cmd_parse(args, out: Output) -> int:
    for text in _inputs(args):
        out.term(parse(text, out.spec))
    return EXIT_OK


def cmd_std(args, out: Output) -> int:
    for text in _inputs(args):
        t = parse(text, out.spec)
        d = standard.explain(t, out.spec)
        if out.fmt == "structured":
            out.json({"term": render(t), "standard": d is None, "diagnostic": d.as_dict() if d else None})
            continue
        out.line("standard" if d is None else "nonstandard")
        if d is not None and args.explain:
            out.line("  " + _diag_text(d))
    return EXIT_OK


def cmd_cmp(args, out: Output) -> int:
    for a, b in _pairs(args):
        s, t = parse(a, out.spec), parse(b, out.spec)
        o = frame.compare(s, t, out.spec)
        if out.fmt == "structured":
            out.json({"left": render(s), "right": render(t), "order": o.symbol})
        else:
            out.line(o.symbol)
    return EXIT_OK


def cmd_norm(args, out: Output) -> int:
    for text in _inputs(args):
        t = parse(text, out.spec)
        try:
            n = standard.normalize(t, out.spec)
        except NotationError as exc:
            raise DomainError(f"{text}: {exc}") from exc
        out.term(n, input=render(t))
    return EXIT_OK


def cmd_enum(args, out: Output) -> int:
    below = parse(args.below, out.spec) if args.below else None
    report = harness.enumerate_standard(out.spec, args.max, below=below)
    if out.fmt == "structured":
        out.json(report.to_dict())
        return EXIT_OK
    for t in report.terms:
        out.line(out.term_text(t))
    return EXIT_OK


def cmd_convert(args, out: Output) -> int:
    for text in _inputs(args):
        t = parse(text, out.spec)
        if args.to == "c1":
            d = standard.explain(t, out.spec)
            if d is not None:
                raise DomainError(f"{text}: C1 rendering needs a standard term ({_diag_text(d)})")
            result = arith.to_c1_text(t, out.spec)
        elif args.to == "c":
            result = render(t)
        else:
            level = args.level or frame.combined_level(t)
            try:
                result = render(frame.to_single_omega(t, level))
            except ValueError as exc:
                raise DomainError(str(exc)) from exc
        if out.fmt == "structured":
            out.json({"input": text, "to": args.to, "result": result})
        else:
            out.line(result)
    return EXIT_OK


def cmd_config(args, out: Output) -> int:
    for a, b in _pairs(args):
        s, t = parse(a, out.spec), parse(b, out.spec)
        try:
            cfg = reflection_config(s, t, out.spec)
        except NotationError as exc:
            raise DomainError(str(exc)) from exc
        if out.fmt == "structured":
            out.json({"a": render(s), "b": render(t), "config": cfg.render(),
                      "constants": [render(c) for c in cfg.constants]})
        else:
            out.line(cfg.render())
    return EXIT_OK


def cmd_diff(args, out: Output) -> int:
    specs = [parse_system(s) for s in args.systems.split(",") if s.strip()]
    for text in _inputs(args):
        verdicts = harness.differential(text, specs)
        if out.fmt == "structured":
            out.json({"input": text, "verdicts": verdicts})
            continue
        if len(args.terms or ()) != 1:
            out.line(text)
        for line in harness.format_matrix(verdicts).splitlines():
            out.line(line)
    return EXIT_OK


def cmd_fuzz(args, out: Output) -> int:
    failures = 0
    for k in range(args.count):
        t = harness.random_term(out.spec, args.seed + k, args.size)
        try:
            n = standard.normalize(t, out.spec)
            ok = standard.explain(n, out.spec) is None and standard.normalize(n, out.spec) is n
            problem = None if ok else "output not a fixed standard form"
        except NotationError as exc:
            n, ok, problem = None, False, str(exc)
        failures += not ok
        if out.fmt == "structured":
            out.json({"seed": args.seed + k, "input": render(t), "output": render(n) if n else None,
                      "ok": ok, "problem": problem})
        elif not ok:
            out.line(f"seed {args.seed + k}: {render(t)}: {problem}")
    if out.fmt != "structured":
        out.line(f"{args.count - failures}/{args.count} normalized to standard fixed points")
    return EXIT_DOMAIN if failures else EXIT_OK


def cmd_audit(args, out: Output) -> int:
    report = harness.enumerate_standard(out.spec, args.max)
    audits = harness.audit_order(out.spec, report.terms, seed=args.seed, samples=args.samples)
    descent = harness.search_descending(out.spec, budget=args.budget) if args.budget else None
    failed = any(not a.passed for a in audits) or (descent is not None and descent.found)
    if out.fmt == "structured":
        out.json({
            "system": out.spec.name,
            "max_symbols": args.max,
            "terms": len(report.terms),
            "audits": [a.to_dict() for a in audits],
            "descent": descent.to_dict() if descent else None,
        })
    else:
        out.line(f"{out.spec.name}: {len(report.terms)} standard terms up to {args.max} symbols")
        for a in audits:
            out.line(a.to_text())
        if descent is not None:
            for line in descent.to_text().splitlines():
                out.line(line)
    return EXIT_DOMAIN if failed else EXIT_OK


COMMANDS = {
    "parse": cmd_parse, "std": cmd_std, "cmp": cmd_cmp, "norm": cmd_norm,
    "enum": cmd_enum, "convert": cmd_convert, "config": cmd_config,
    "diff": cmd_diff, "fuzz": cmd_fuzz, "audit": cmd_audit,
}


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--system", default=COMBINED,
                        help="bh, main:N, combined, dri, dor, dor-pass[:full|none], cpass (default: combined)")
    common.add_argument("--format", choices=FORMATS, default="pretty")
    common.add_argument("--file", help="read one term per line ('#' starts a comment)")

    parser = argparse.ArgumentParser(prog="ordnota", description="Ordinal notation toolkit.")
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, help_text, terms=True):
        p = sub.add_parser(name, parents=[common], help=help_text)
        if terms:
            p.add_argument("terms", nargs="*", help="terms (default: read from --file or stdin)")
        return p

    add("parse", "parse and print terms")
    add("std", "standardness verdicts").add_argument("--explain", action="store_true",
                                                     help="print the first failing condition")
    add("cmp", "compare two terms: prints <, = or >")
    add("norm", "convert to standard form")
    p = add("enum", "list standard terms in order", terms=False)
    p.add_argument("--max", type=int, default=7, help="symbol budget")
    p.add_argument("--below", help="only terms below this one")
    p = add("convert", "change representation")
    p.add_argument("--to", choices=("c1", "c", "omega_n"), required=True)
    p.add_argument("--level", type=int, help="target Omega index for omega_n")
    add("config", "reflection configuration of the first term above the second")
    add("diff", "standardness across systems").add_argument(
        "--systems", default="dor,main:2", help="comma-separated system selectors")
    p = add("fuzz", "normalize random terms and check the results", terms=False)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--count", type=int, default=200)
    p.add_argument("--size", type=int, default=9)
    p = add("audit", "order axioms and a descending-chain search", terms=False)
    p.add_argument("--max", type=int, default=7)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100_000)
    p.add_argument("--budget", type=int, default=20_000, help="descent search budget (0 skips it)")
    return parser


def run(argv: Optional[Iterable[str]] = None, stdout=None, stderr=None) -> int:
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(list(argv) if argv is not None else None)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        spec = parse_system(args.system)
    except ValueError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    out = Output(args.format, spec, stdout)
    try:
        return COMMANDS[args.command](args, out)
    except ParseError as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE
    except (DomainError, NotationError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_DOMAIN
    except (OSError, ValueError) as exc:
        stderr.write(f"error: {exc}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()
