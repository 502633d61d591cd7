from functools import lru_cache

import pytest

from flipcat.flipgraph import build_flip_graph

ACCEPTANCE_LINES = []


@lru_cache(maxsize=None)
def flip_graph(n):
    return build_flip_graph(n)


@pytest.fixture
def graph():
    return flip_graph


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
