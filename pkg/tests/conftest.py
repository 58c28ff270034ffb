import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from commdetect.graph import Graph

import helpers


@pytest.fixture
def cycle4():
    return helpers.build(4, helpers.CYCLE4_EDGES)


@pytest.fixture
def chain6():
    return helpers.build(6, helpers.CHAIN6_EDGES)


@pytest.fixture
def toy7():
    return helpers.build(7, helpers.TOY7_EDGES)


@pytest.fixture
def chain12():
    return helpers.build(12, helpers.CHAIN12_EDGES)


@pytest.fixture
def karate():
    import commdetect

    path = Path(commdetect.__file__).parent / "data" / "karate.edges"
    return Graph.from_edge_list(path.read_text(encoding="utf-8"))
