from pathlib import Path

import pytest
from hypothesis import HealthCheck, settings

from ordnota import parse_system
from ordnota.harness import enumerate_standard

settings.register_profile(
    "ordnota",
    deadline=None,
    derandomize=True,
    max_examples=200,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ordnota")

FIXTURES = Path(__file__).parent / "fixtures"


@pytest.fixture(scope="session")
def corpus():
    from ordnota.parsing import iter_lines

    with open(FIXTURES / "corpus.txt", encoding="utf-8") as fh:
        return [tuple(p.strip() for p in body.split("|", 1)) for _, body in iter_lines(fh)]


_ENUM_CACHE = {}


def standard_terms(system: str, max_symbols: int):
    key = (system, max_symbols)
    if key not in _ENUM_CACHE:
        _ENUM_CACHE[key] = enumerate_standard(parse_system(system), max_symbols).terms
    return _ENUM_CACHE[key]


ACCEPTANCE_LINES = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(ACCEPTANCE_LINES, key=lambda s: int(s.split()[1].rstrip(":"))):
            terminalreporter.write_line(line)
