import random

import pytest

from core import CGraph
from field import make_modulus


@pytest.fixture
def gf2():
    return make_modulus(2)


@pytest.fixture
def gf3():
    return make_modulus(3)


@pytest.fixture
def gf5():
    return make_modulus(5)


@pytest.fixture
def rng():
    """Seeded so randomized checks are reproducible."""
    return random.Random(20240607)


@pytest.fixture
def path3(gf3):
    """0 -1- 1 -2- 2"""
    return CGraph(3, gf3, {(0, 1): 1, (1, 2): 2})


@pytest.fixture
def mixed4(gf3):
    """Four vertices: a 1-colored triangle on 0,1,2 and a 2-colored pendant edge 2-3."""
    return CGraph(4, gf3, {(0, 1): 1, (0, 2): 1, (1, 2): 1, (2, 3): 2})


@pytest.fixture(autouse=True)
def default_limits(monkeypatch):
    """Tests run against the built-in defaults, not a developer's .env."""
    for name in (
        "CGRAPH_SEARCH_LIMIT",
        "CGRAPH_CENSUS_BUDGET",
        "CGRAPH_ORACLE_BUDGET",
        "CGRAPH_DATABASE_URL",
        "CGRAPH_LOG_LEVEL",
    ):
        monkeypatch.delenv(name, raising=False)
