import sys
from pathlib import Path

import pytest

from nbc_bijections.io import fixture_text, parse_arrangement, parse_om

sys.path.insert(0, str(Path(__file__).parent))


@pytest.fixture(scope="session")
def ex21():
    return parse_om(fixture_text("example21.json"))


@pytest.fixture(scope="session")
def ex34():
    return parse_arrangement(fixture_text("example34.json"))


def as_tuple_arr(arr):
    """Plain (dim, [(normal, offset)]) form for the oracles."""
    return arr.dim, [(h.normal, h.offset) for h in arr.hyperplanes]


def pytest_terminal_summary(terminalreporter):
    acceptance = sys.modules.get("test_acceptance")
    if acceptance is None or not acceptance.RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(acceptance.RESULTS):
        terminalreporter.write_line(acceptance.RESULTS[number])
