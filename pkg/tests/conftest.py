import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from dclabel.graph import Graph, Labeling  # noqa: E402

# The 11-vertex worked example with two triangles; vertex v_i has id i.
WORKED_EDGES = [
    (5, 1), (5, 6), (5, 9), (5, 4), (2, 6), (1, 4),
    (10, 6), (10, 7), (6, 7), (6, 3), (11, 7), (7, 8),
]
# Its reference degree complete labeling: v_i -> label.
WORKED_LABELS = {4: 1, 1: 2, 5: 3, 9: 4, 6: 5, 2: 6, 3: 7, 10: 8, 7: 9, 8: 10, 11: 11}


@pytest.fixture
def g1():
    return Graph(4, [(1, 2), (2, 3), (3, 4)])


@pytest.fixture
def g2():
    return Graph(4, [(1, 3), (2, 3), (2, 4)])


@pytest.fixture
def worked():
    return Graph(11, WORKED_EDGES)


@pytest.fixture
def worked_labels():
    return Labeling.from_mapping(WORKED_LABELS)


@pytest.fixture
def triangle():
    return Graph(3, [(1, 2), (1, 3), (2, 3)])
