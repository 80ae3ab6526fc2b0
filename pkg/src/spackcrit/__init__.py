"""Exact S-packing colourings and S-packing chromatic vertex-criticality."""

__version__ = "0.1.0"

from .errors import NoFiniteColoring  # noqa: F401
from .graph import Graph, parse_graph6, write_graph6  # noqa: F401
from .seq import PackingSequence, parse_sequence  # noqa: F401
from .solver import chi_S, exists_coloring  # noqa: F401
from .critical import criticality_report, is_k_critical, enumerate_critical  # noqa: F401
