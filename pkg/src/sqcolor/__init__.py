"""Square coloring of plane graphs with maximum degree 5 using at most 17 colors."""

from .color import (
    SquareColoring,
    color_square_17,
    greedy_square_coloring,
    verify_square_coloring,
)
from .discharge import AuditReport, audit
from .embed import EmbeddedGraph, Face, build_from_rotations, format_epg, parse_epg
from .estimator import SquareColorer
from .exceptions import (
    DegreeTooHigh,
    EmbeddingError,
    IrreducibleGraph,
    NotConnected,
    SquareColoringError,
)
from .gen import GenSpec, gen_random_delta5, named_graph
from .metrics import VertexProfile, n2_set, n2_upper_bound, vertex_profile
from .reduce import ReductionWitness, apply_reduction, find_reduction
from .square import chi2_exact, chi_exact, square_graph

__version__ = "0.1.0"
