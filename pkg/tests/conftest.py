import os
from pathlib import Path

import pytest

FIXTURES = Path(__file__).parent / "fixtures"

# seed for the random graph corpus; override with ZIGZAG_SEED
SEED = int(os.environ.get("ZIGZAG_SEED", "20240611"))


@pytest.fixture
def fixtures_dir() -> Path:
    return FIXTURES


@pytest.fixture(scope="session")
def example():
    from zigzag.corpus import example_semigroup

    return example_semigroup()


def pytest_terminal_summary(terminalreporter):
    try:
        from test_acceptance import RESULTS
    except ImportError:
        return
    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(RESULTS):
        terminalreporter.write_line(RESULTS[n])
