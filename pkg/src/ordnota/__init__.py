"""Ordinal notation systems built on the collapsing function C.

Terms are immutable and interned; every system shares the same term
algebra and differs only in its standardness rules and comparison.
"""
from .arith import InexpressibleError, add, c1_eval, cnf_view, omega_pow, to_c1_text
from .config import Config, compare_configs, reflection_config
from .frame import compare, compare_postfix, compare_recursive, to_single_omega
from .parsing import ParseError, parse
from .standard import NotStandardizable, explain, is_standard, normalize
from .systems import (
    SHIPPED,
    ArityError,
    Diagnostic,
    NormalizationBudgetExceeded,
    NotationError,
    Ordering,
    SystemSpec,
    parse_system,
)
from .terms import W, X, ZERO, C, Term, const, omega, render

__version__ = "0.1.0"

_LAZY = {"StandardFormNormalizer", "StandardnessClassifier", "check_terms"}


def __getattr__(name):
    # scikit-learn is slow to import; load the estimators on first use
    if name in _LAZY:
        from . import estimator
        return getattr(estimator, name)
    raise AttributeError(f"module 'ordnota' has no attribute {name!r}")

__all__ = [
    "Term", "C", "ZERO", "W", "X", "omega", "const", "render", "parse", "ParseError",
    "SystemSpec", "parse_system", "SHIPPED", "Ordering", "Diagnostic",
    "NotationError", "ArityError", "NormalizationBudgetExceeded", "NotStandardizable",
    "InexpressibleError", "compare", "compare_postfix", "compare_recursive", "to_single_omega",
    "explain", "is_standard", "normalize", "add", "omega_pow", "cnf_view", "c1_eval",
    "to_c1_text", "Config", "reflection_config", "compare_configs",
    "StandardFormNormalizer", "StandardnessClassifier", "check_terms",
]
