# Shared fixtures: isolated configuration, a clean memo cache, and small graphs

import os

import pytest

from src.forest_hilbert.cache import get_poly_cache
from src.forest_hilbert.config import ENV_PREFIX, reset_config
from src.forest_hilbert.corpus import find_graph
from src.forest_hilbert.graph import Multigraph


@pytest.fixture(autouse=True)
def isolated_config(tmp_path, monkeypatch):
    """Point the config at an empty directory and drop any FOREST_HILBERT_* variables."""
    for key in list(os.environ):
        if key.startswith(ENV_PREFIX):
            monkeypatch.delenv(key)
    config_dir = tmp_path / "config"
    config_dir.mkdir()
    monkeypatch.setenv(f"{ENV_PREFIX}CONFIG_DIR", str(config_dir))
    reset_config()
    get_poly_cache().clear_all()
    yield config_dir
    reset_config()


def _builtin(name: str) -> Multigraph:
    return find_graph(name).graph


@pytest.fixture
def empty_graph():
    return _builtin("empty")


@pytest.fixture
def loop_graph():
    return _builtin("k1_loop")


@pytest.fixture
def single_edge():
    return _builtin("single_edge")


@pytest.fixture
def two_parallel():
    return _builtin("two_parallel")


@pytest.fixture
def path3():
    return _builtin("path_p3")


@pytest.fixture
def triangle():
    return _builtin("triangle")


@pytest.fixture
def k4():
    return _builtin("k4")


@pytest.fixture
def c4():
    return _builtin("c4")


@pytest.fixture
def write_graph(tmp_path):
    """Write graph text to a file and return its path."""
    def _write(text: str, name: str = "graph.txt") -> str:
        path = tmp_path / name
        path.write_text(text)
        return str(path)
    return _write
