import pytest


def pytest_addoption(parser):
    parser.addoption("--runslow", action="store_true", default=False,
                     help="run tests in the slow feasibility tier")


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long-running, not part of the gate")


def pytest_collection_modifyitems(config, items):
    if config.getoption("--runslow"):
        return
    skip = pytest.mark.skip(reason="slow tier; pass --runslow to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)
