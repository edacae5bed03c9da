import pytest
from hypothesis import settings

from strongcocomp.constructions import generate
from strongcocomp.graph_core import Bigraph

import acceptance_log

# brute-force oracles make example timing uneven
settings.register_profile("repo", deadline=None)
settings.load_profile("repo")


def pytest_terminal_summary(terminalreporter):
    if acceptance_log.LINES:
        terminalreporter.section("acceptance criteria")
        for line in sorted(acceptance_log.LINES, key=lambda s: int(s.split()[2].rstrip(":"))):
            terminalreporter.write_line(line)


@pytest.fixture
def k33():
    return generate("complete_bipartite", p=3, q=3)


@pytest.fixture
def p4():
    return generate("path", n=4)


@pytest.fixture
def c4():
    return generate("cycle", n=4)


@pytest.fixture
def c5():
    return generate("cycle", n=5)


@pytest.fixture
def two_k2_bigraph():
    return Bigraph.from_edges(2, 2, [(0, 0), (1, 1)])
