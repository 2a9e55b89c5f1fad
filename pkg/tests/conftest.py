import pytest

from parcolor.core.graph import Graph, generate_synthetic


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False, help="run the long acceptance sweeps")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running acceptance sweep, needs --runslow")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip_slow = pytest.mark.skip(reason="needs --runslow")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip_slow)


@pytest.fixture
def path3():
    return Graph.from_edges(3, [(0, 1), (1, 2)])


@pytest.fixture
def k4():
    return generate_synthetic("complete", (4,))


@pytest.fixture
def single_edge():
    return Graph.from_edges(2, [(0, 1)])


@pytest.fixture
def gnp500():
    return generate_synthetic("gnp", (500, 0.02), seed=3)
