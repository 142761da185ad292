"""Coincidence similarity networks for finding groups in bipartite networks."""

__version__ = "0.1.0"

from .bipartite import (
    BipartiteNetwork,
    Orientation,
    ProjectedNetwork,
    SimilarityNetwork,
    coincidence_network,
    feature_matrix,
    from_symmetric,
    project,
    to_symmetric,
)
from .errors import CoincnetError, DimensionError, DomainError, FormatError, IsolatedNodeError
from .evaluation import (
    EnsembleSummary,
    ErrorCurve,
    ErrorPair,
    ThresholdedGraph,
    ensemble,
    error_sweep,
    group_errors,
    threshold_graph,
    threshold_grid,
)
from .generator import GeneratorConfig, GroundTruth, generate, reference_model, rewire
from .similarity import SimilarityTriple, coincidence, interiority, jaccard, pairwise_similarity
