"""Degree complete labelings of graphs: recognition, construction, verification."""

from .construction import label_caterpillar, label_graph
from .errors import (
    CharacterizationError,
    DCLError,
    EnumerationCapError,
    GraphInputError,
    InconsistentDecompositionError,
)
from .graph import Graph, Labeling, parse_graph, serialize_graph
from .qian import find_forbidden_configuration, is_degree_complete
from .realization import is_degree_complete_oracle, realize
from .recognition import (
    check_iii,
    check_iv,
    find_unlabeled_obstruction,
    has_degree_complete_labeling,
)

__all__ = [
    "CharacterizationError",
    "DCLError",
    "EnumerationCapError",
    "Graph",
    "GraphInputError",
    "InconsistentDecompositionError",
    "Labeling",
    "check_iii",
    "check_iv",
    "find_forbidden_configuration",
    "find_unlabeled_obstruction",
    "has_degree_complete_labeling",
    "is_degree_complete",
    "is_degree_complete_oracle",
    "label_caterpillar",
    "label_graph",
    "parse_graph",
    "realize",
    "serialize_graph",
]
