"""Pytest configuration and fixtures for hamburn tests."""

from pathlib import Path

import pytest
from click.testing import CliRunner

from src.config.settings import Settings
from src.graphs.explicit import ExplicitGraph
from src.graphs.generators import path_graph
from src.hamming.materialize import materialize
from src.hamming.params import HammingParams


@pytest.fixture
def p4() -> ExplicitGraph:
    """Path 0 - 1 - 2 - 3."""
    return path_graph(4)


@pytest.fixture
def p9() -> ExplicitGraph:
    return path_graph(9)


@pytest.fixture
def single_vertex() -> ExplicitGraph:
    return ExplicitGraph(1, (frozenset(),))


@pytest.fixture
def hamming_3_3() -> ExplicitGraph:
    """Materialized H(3, 3): 27 vertices."""
    return materialize(HammingParams(3, 3))


@pytest.fixture
def hypercube_4() -> ExplicitGraph:
    """Materialized H(4, 2): 16 vertices."""
    return materialize(HammingParams(4, 2))


@pytest.fixture
def edge_list_text() -> str:
    """A 5-cycle in edge-list format, with comments and blank lines."""
    return """# five-cycle
5 5

0 1
1 2   # middle
2 3
3 4
4 0
"""


@pytest.fixture
def edge_list_file(tmp_path: Path, edge_list_text: str) -> Path:
    path = tmp_path / "cycle5.txt"
    path.write_text(edge_list_text, encoding="utf-8")
    return path


@pytest.fixture
def test_settings() -> Settings:
    """Tight caps for tests that patch a module-level ``settings``."""
    return Settings(materialize_cap=1024, solver_vertex_cap=32, workers=1)


@pytest.fixture
def runner() -> CliRunner:
    return CliRunner()
