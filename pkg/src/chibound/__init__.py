"""chibound: a workbench for chromatic-number experiments on small graphs.

Exact coloring and clique search, induced tree containment, certificate
validators for structured witnesses (splits, spires, cathedrals, bands,
equipment), arbitrary-precision threshold formulas, counterexample
builders, and a reproducible experiment harness.
"""

from ._kernels import BACKEND as KERNEL_BACKEND
from .graphs import (
    Graph,
    LevelDecomposition,
    components,
    covers,
    distance,
    induced_subgraph,
    level_decomposition,
    neighborhood,
)
from .graphio import parse_graph, write_graph
from .coloring import (
    Coloring,
    chi_local,
    chromatic_number,
    clique_number,
    is_k_colorable,
    is_vertex_critical,
    minimal_subset_with_chi,
)

__all__ = [
    "Graph",
    "LevelDecomposition",
    "Coloring",
    "KERNEL_BACKEND",
    "components",
    "covers",
    "distance",
    "induced_subgraph",
    "level_decomposition",
    "neighborhood",
    "parse_graph",
    "write_graph",
    "chi_local",
    "chromatic_number",
    "clique_number",
    "is_k_colorable",
    "is_vertex_critical",
    "minimal_subset_with_chi",
]

__version__ = "0.1.0"
