import pytest

from config import Config, ENV_PREFIX
from core.db import dispose_engines
from core.graphs import SparseGraph, build_middle_cube


@pytest.fixture(autouse=True)
def clean_config(monkeypatch):
    """Every test starts from built-in defaults with no MIDSPEC_* variables."""
    import os
    for name in list(os.environ):
        if name.startswith(ENV_PREFIX):
            monkeypatch.delenv(name, raising=False)
    Config.reset()
    yield
    Config.reset()
    dispose_engines()


@pytest.fixture
def m3():
    return build_middle_cube(1)


@pytest.fixture
def m5():
    return build_middle_cube(2)


@pytest.fixture
def k2():
    return SparseGraph.from_edges(2, [(0, 1)])
