import pytest

from polykernel import FiniteStructure

ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)


def graph(atoms, edges):
    """Undirected graph as a structure with E stored in both directions."""
    return FiniteStructure(tuple(atoms), {"E": [t for u, v in edges for t in ((u, v), (v, u))]})


@pytest.fixture
def triangle():
    return graph("abc", [("a", "b"), ("a", "c"), ("b", "c")])


@pytest.fixture
def maxsat_instance():
    return FiniteStructure(("c1", "c2", "v1"), {"P": [("v1", "c1")], "N": [("v1", "c2")]})
