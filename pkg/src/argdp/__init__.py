"""Abstract argumentation solver based on dynamic programming over tree
decompositions, with a brute-force oracle and a benchmark harness."""

from .af import (
    ArgumentationFramework,
    CapacityError,
    UnknownArgumentError,
    is_admissible,
    is_conflict_free,
    is_defended,
)
from .aspartix import AspartixError, ParseDiagnostic, parse_aspartix, serialize_aspartix
from .decomposition import (
    HEURISTICS,
    PrimalGraph,
    TreeDecomposition,
    decompose,
    elimination_order,
    primal_graph,
    validate,
)
from .dp import (
    DeadlineExceeded,
    MalformedDecompositionError,
    count_extensions,
    decide_credulous,
    decide_skeptical,
    enumerate_extensions,
    traverse,
)
from .normalize import NormalizedDecomposition, normalize, validate_normalized


def build_pipeline(af, heuristic="min-fill", seed=0):
    """Decompose and normalize in one go; returns the normalized
    decomposition ready for the dp functions."""
    graph = primal_graph(af)
    order = elimination_order(graph, heuristic, seed)
    return normalize(decompose(graph, order))
