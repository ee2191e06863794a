import pytest

from pcube import generators as gen
from pcube.graph import Graph

ACCEPTANCE_LINES = []


def worked_example():
    """Partial cube whose max-degree vertex 0 has four neighbors, and whose
    first round leaves four edges unlabeled: 1-6 and 5-7 lie on a 4-cycle
    and merge after contraction, 6-8 and 8-9 hang off as a tail.  The
    quotient is a 4-vertex path and the final dimension is 7."""
    pairs = [(0, 1), (0, 2), (0, 3), (0, 4),
             (1, 5), (2, 5),            # x = q1 + q2
             (1, 6), (5, 7), (6, 7),    # 4-cycle 1-6-7-5
             (6, 8), (8, 9)]            # tail
    return Graph.from_edge_list(10, pairs)


@pytest.fixture
def fig_graph():
    return worked_example()


@pytest.fixture
def q2():
    return gen.hypercube(2)


@pytest.fixture
def k23():
    return gen.complete_bipartite(2, 3)


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
