import itertools

import pytest
from hypothesis import strategies as st

from kleinzip import census, maps, ooa
from kleinzip.graph import Graph


@pytest.fixture(scope="session")
def coxeter():
    return census.build_coxeter()


@pytest.fixture(scope="session")
def heawood():
    return census.build_heawood()


@pytest.fixture(scope="session")
def fixture_ooa():
    return ooa.paper_ooa_fixture()


@pytest.fixture(scope="session")
def klein_map(fixture_ooa):
    return maps.zip_ooa(fixture_ooa)


@pytest.fixture(scope="session")
def klein(klein_map):
    return maps.underlying_graph(klein_map)


@pytest.fixture(scope="session")
def quartic(klein_map):
    return maps.dual_graph(klein_map)


def petersen() -> Graph:
    outer = [(i, (i + 1) % 5) for i in range(5)]
    spokes = [(i, i + 5) for i in range(5)]
    inner = [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return Graph.from_edges(10, outer + spokes + inner)


@st.composite
def small_graphs(draw, min_n=1, max_n=7):
    n = draw(st.integers(min_n, max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True)) if pairs else []
    return Graph(n, frozenset(chosen))


ACCEPTANCE_LINES: list[str] = []


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
