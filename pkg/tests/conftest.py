import os
import random

import pytest

from graphzeta.graph import Graph, is_connected


def pytest_collection_modifyitems(config, items):
    if os.environ.get("GRAPHZETA_SLOW"):
        return
    skip = pytest.mark.skip(reason="slow; set GRAPHZETA_SLOW=1 to run")
    for item in items:
        if "slow" in item.keywords:
            item.add_marker(skip)


def random_connected(rng: random.Random, n: int, p: float = 0.5) -> Graph:
    while True:
        g = Graph(n, [(i, j) for j in range(n) for i in range(j) if rng.random() < p])
        if is_connected(g):
            return g


@pytest.fixture
def rng():
    return random.Random(20240101)


def pytest_terminal_summary(terminalreporter):
    import sys

    mod = sys.modules.get("test_acceptance")
    lines = getattr(mod, "RESULTS", None)
    if lines:
        terminalreporter.section("acceptance criteria")
        for line in lines:
            terminalreporter.write_line(line)
