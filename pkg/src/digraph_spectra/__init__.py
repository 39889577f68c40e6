"""Laplacians of Kirchhoff-balanced directed graphs, their spectra, and certified eigenvalue inequalities."""

from .eigen import (
    BACKEND,
    ComplexSpectrum,
    ConvergenceError,
    Spectrum,
    SymmetryError,
    complex_distance,
    eig_general,
    eig_m_symmetric,
    rayleigh,
    real_distance,
    zero_cluster_size,
)
from .generators import (
    FlowerDecomposition,
    cycle,
    flower_compose,
    random_balanced,
    random_flower,
    random_tree,
    symmetric_star,
    verify_flower,
)
from .graph import (
    DirectedWeightedGraph,
    GraphError,
    boundary_sets,
    degree_profile,
    induced_subgraph,
    is_balanced,
    is_connected,
    is_strongly_connected,
    part_of_graph,
    partial_graph,
    validate,
)
from .graph_io import GraphFormatError, graph_to_dict, load_graph, parse_graph, serialize_graph
from .operators import (
    Measure,
    OperatorError,
    OperatorMatrix,
    adjoint_laplacian,
    adjoint_sum,
    dirichlet,
    green_form,
    laplacian,
    m_adjoint,
    special_laplacian,
)
from .theorems import (
    Certificate,
    HypothesisError,
    IndexRangeError,
    Partition,
    TheoremId,
    batch_certify,
    certify,
    partition_from_split,
    validate_partition,
)

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "Certificate",
    "ComplexSpectrum",
    "ConvergenceError",
    "DirectedWeightedGraph",
    "FlowerDecomposition",
    "GraphError",
    "GraphFormatError",
    "HypothesisError",
    "IndexRangeError",
    "Measure",
    "OperatorError",
    "OperatorMatrix",
    "Partition",
    "Spectrum",
    "SymmetryError",
    "TheoremId",
    "adjoint_laplacian",
    "adjoint_sum",
    "batch_certify",
    "boundary_sets",
    "certify",
    "complex_distance",
    "cycle",
    "degree_profile",
    "dirichlet",
    "eig_general",
    "eig_m_symmetric",
    "flower_compose",
    "graph_to_dict",
    "green_form",
    "induced_subgraph",
    "is_balanced",
    "is_connected",
    "is_strongly_connected",
    "laplacian",
    "load_graph",
    "m_adjoint",
    "parse_graph",
    "part_of_graph",
    "partial_graph",
    "partition_from_split",
    "random_balanced",
    "random_flower",
    "random_tree",
    "rayleigh",
    "real_distance",
    "serialize_graph",
    "special_laplacian",
    "symmetric_star",
    "validate",
    "validate_partition",
    "verify_flower",
    "zero_cluster_size",
]
