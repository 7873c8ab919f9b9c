"""System selectors, orderings and diagnostics shared by every notation system."""
from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Optional, Tuple

from .terms import Path

BH = "bh"
MAIN = "main"
COMBINED = "combined"
DRI = "dri"
DOR = "dor"
DOR_PASS = "dor-pass"
CPASS = "cpass"

PASS_FULL = "full"
PASS_NONE = "none"
PASS_BROKEN = "broken"  # full passthrough that also permits z = y; ill-founded


class Ordering(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1

    @property
    def symbol(self) -> str:
        return {-1: "<", 0: "=", 1: ">"}[int(self)]


@dataclass(frozen=True)
class SystemSpec:
    """Which notation system governs standardness and comparison.

    ``level`` is n for ``main``; ``passthrough`` is the restriction for
    ``dor-pass``; ``constants`` is the number of external constants
    ``$0 .. $k-1`` available when building above an ordinal.
    """

    system: str
    level: int = 1
    passthrough: str = PASS_FULL
    constants: int = 0

    def __post_init__(self):
        if self.system not in (BH, MAIN, COMBINED, DRI, DOR, DOR_PASS, CPASS):
            raise ValueError(f"unknown system {self.system!r}")
        if self.system == MAIN and self.level < 0:
            raise ValueError("main level must be non-negative")
        if self.passthrough not in (PASS_FULL, PASS_NONE, PASS_BROKEN):
            raise ValueError(f"unknown passthrough {self.passthrough!r}")

    @property
    def arity(self) -> int:
        return 3 if self.system in (DRI, CPASS) else 2

    @property
    def omega_index(self) -> Optional[int]:
        """Index of the single Omega constant, or None (combined / no Omega)."""
        if self.system == MAIN:
            return self.level
        if self.system in (BH, DOR, DOR_PASS):
            return 1
        return None

    @property
    def has_omega(self) -> bool:
        return self.system not in (DRI, CPASS)

    @property
    def name(self) -> str:
        if self.system == MAIN:
            return f"main:{self.level}"
        if self.system == DOR_PASS:
            return f"dor-pass:{self.passthrough}"
        return self.system


def parse_system(text: str) -> SystemSpec:
    """Parse a selector such as ``bh``, ``main:2``, ``combined``, ``dor-pass:none``."""
    text = text.strip().lower()
    name, _, arg = text.partition(":")
    consts = 0
    if "+" in arg:
        arg, _, c = arg.partition("+")
        consts = int(c)
    elif "+" in name:
        name, _, c = name.partition("+")
        consts = int(c)
    if name == MAIN:
        if not arg:
            raise ValueError("main requires a level, e.g. main:2")
        return SystemSpec(MAIN, level=int(arg), constants=consts)
    if name == DOR_PASS:
        return SystemSpec(DOR_PASS, passthrough=arg or PASS_FULL, constants=consts)
    if arg:
        raise ValueError(f"system {name!r} takes no argument")
    return SystemSpec(name, constants=consts)


SHIPPED = (
    SystemSpec(BH),
    SystemSpec(MAIN, 1),
    SystemSpec(MAIN, 2),
    SystemSpec(MAIN, 3),
    SystemSpec(COMBINED),
    SystemSpec(DRI),
    SystemSpec(DOR),
    SystemSpec(DOR_PASS, passthrough=PASS_FULL),
    SystemSpec(CPASS),
)

# Diagnostic condition tags.
BASE_NOT_MINIMAL = "base-not-minimal"
BFB_VIOLATION = "built-from-below-violation"
ARITY = "arity"
CONSTANT_MISUSE = "constant-misuse"
OMEGA_NORMALIZATION = "omega-normalization"


@dataclass(frozen=True)
class Diagnostic:
    """Why a term is not standard: the failed condition and where."""

    condition: str
    path: Path
    message: str
    witnesses: Tuple[Path, ...] = field(default=())

    def shifted(self, prefix: Path) -> "Diagnostic":
        return Diagnostic(
            self.condition,
            prefix + self.path,
            self.message,
            tuple(prefix + w for w in self.witnesses),
        )

    def as_dict(self) -> dict:
        return {
            "condition": self.condition,
            "path": list(self.path),
            "witnesses": [list(w) for w in self.witnesses],
            "message": self.message,
        }


class NotationError(Exception):
    """Base class for domain errors raised by this package."""


class ArityError(NotationError, ValueError):
    pass


class NormalizationBudgetExceeded(NotationError, RuntimeError):
    """The conversion to standard form did not converge within its step budget."""
