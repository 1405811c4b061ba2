import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from topogame.spacegen import (
    chain,
    discrete,
    fan,
    indiscrete,
    partition_space,
    sierpinski,
)


@pytest.fixture
def sierp():
    return sierpinski()


@pytest.fixture
def d2():
    return discrete(2)


@pytest.fixture
def d3():
    return discrete(3)


@pytest.fixture
def blocks22():
    return partition_space([[0, 1], [2, 3]])


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: long exhaustive runs")
