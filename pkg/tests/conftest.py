"""Pytest configuration and shared fixtures."""

import json

import pytest
from fastmcp import Client

from src.corpus import named_hypergraphs
from src.linalg import FieldSpec
from src.server import SheafMCPServer


def extract_text_from_response(response):
    """Extract text from FastMCP response."""
    if isinstance(response, list) and len(response) > 0:
        if hasattr(response[0], 'text'):
            return response[0].text
    if hasattr(response, 'content') and response.content:
        return response.content[0].text
    return str(response)


def hypergraph_doc(faces, cardinality=2, vertices=None):
    """JSON document of a hypergraph with a uniform cardinality."""
    doc = {"faces": [list(f) for f in faces], "cardinality": cardinality}
    if vertices is not None:
        doc["vertices"] = list(vertices)
    return doc


EDGE_DOC = hypergraph_doc([["1"], ["2"], ["1", "2"]])
BOUNDARY_DOC = hypergraph_doc([["1"], ["2"], ["3"], ["1", "2"], ["1", "3"], ["2", "3"]])


@pytest.fixture
def rat():
    """The rational field."""
    return FieldSpec.rationals()


@pytest.fixture
def fp7():
    """The prime field of order 7."""
    return FieldSpec.prime(7)


@pytest.fixture
def named():
    """Named small hypergraphs with N = 2."""
    return named_hypergraphs()


@pytest.fixture
def edge_doc():
    return dict(EDGE_DOC)


@pytest.fixture
def boundary_doc():
    return dict(BOUNDARY_DOC)


@pytest.fixture
def write_json(tmp_path):
    """Write a document to a temporary file and return its path."""
    counter = {"n": 0}

    def write(doc, name=None):
        counter["n"] += 1
        path = tmp_path / (name or f"input{counter['n']}.json")
        path.write_text(doc if isinstance(doc, str) else json.dumps(doc))
        return str(path)

    return write


@pytest.fixture
def clean_env(monkeypatch):
    """Remove every SHEAF_* variable so settings fall back to defaults."""
    for name in ("SHEAF_FIELD", "SHEAF_LOG_LEVEL", "SHEAF_MAX_DEGREE", "SHEAF_CORPUS_SEED"):
        monkeypatch.delenv(name, raising=False)
    yield monkeypatch


@pytest.fixture
def server(clean_env):
    """Create a SheafMCPServer instance for testing."""
    return SheafMCPServer()


@pytest.fixture
def client(server):
    """Create a FastMCP client for testing."""
    return Client(server.get_mcp_instance())


def pytest_configure(config):
    config.addinivalue_line("markers", "slow: sweeps over the full default corpus (deselect with -m 'not slow')")
