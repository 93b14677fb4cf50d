import numpy as np
import pytest

from pseudoctx import enumerate_two_valued_states
from pseudoctx.fixtures import combo_graph, small_graph, vector_table


@pytest.fixture(scope="session")
def small():
    return small_graph()


@pytest.fixture(scope="session")
def combo():
    return combo_graph()


@pytest.fixture(scope="session")
def small_states(small):
    return enumerate_two_valued_states(small)


@pytest.fixture(scope="session")
def combo_states(combo):
    return enumerate_two_valued_states(combo)


@pytest.fixture(scope="session")
def heuristic():
    return vector_table("small-for-heuristic")


@pytest.fixture(scope="session")
def pi3():
    return vector_table("combo-for-alpha-pi3")


@pytest.fixture(scope="session")
def pi2():
    return vector_table("combo-for-alpha-pi2")


@pytest.fixture
def rng():
    return np.random.default_rng(20240607)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance") or sys.modules.get("tests.test_acceptance")
    results = getattr(mod, "RESULTS", None)
    if not results:
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(results):
        terminalreporter.write_line(results[n])
    missing = [n for n in range(1, 13) if n not in results]
    if missing:
        terminalreporter.write_line(f"not run: {missing}")
