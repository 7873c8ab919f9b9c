"""Hypothesis strategies over standard terms drawn from exhaustive enumeration."""
from hypothesis import strategies as st

from conftest import standard_terms


def standard_term(system: str, max_symbols: int = 9):
    return st.sampled_from(standard_terms(system, max_symbols))
