"""Machine-checked certificates for the spectral inequalities of directed-graph Laplacians."""

from .batch import FAMILIES, BatchSummary, GenerationError, batch_certify, generate_instance
from .certificate import (
    Certificate,
    CertificateBuilder,
    Check,
    HypothesisError,
    IndexRangeError,
    TheoremId,
    default_tolerance,
    input_digest,
)
from .checks import (
    attach_graph,
    certify,
    cycle_corollary,
    cycle_spectrum,
    cycle_subgraph_corollary,
    dirichlet_interlace,
    dirichlet_max_combine,
    dirichlet_realpart,
    edge_monotone,
    edge_sandwich,
    edge_weyl,
    flower_from_parts,
    flower_monotone,
    green_identity,
    partition_bound,
    partition_realpart,
    positivity_s,
    realpart_lemma,
    require_graph,
    single_edge_attach,
    spectrum_basic,
    subgraph_interlace,
    tree_star_bound,
)
from .partition import Partition, PartitionReport, partition_from_split, validate_partition

__all__ = [
    "FAMILIES",
    "BatchSummary",
    "Certificate",
    "CertificateBuilder",
    "Check",
    "GenerationError",
    "HypothesisError",
    "IndexRangeError",
    "Partition",
    "PartitionReport",
    "TheoremId",
    "attach_graph",
    "batch_certify",
    "certify",
    "cycle_corollary",
    "cycle_spectrum",
    "cycle_subgraph_corollary",
    "default_tolerance",
    "dirichlet_interlace",
    "dirichlet_max_combine",
    "dirichlet_realpart",
    "edge_monotone",
    "edge_sandwich",
    "edge_weyl",
    "flower_from_parts",
    "flower_monotone",
    "generate_instance",
    "green_identity",
    "input_digest",
    "partition_bound",
    "partition_from_split",
    "partition_realpart",
    "positivity_s",
    "realpart_lemma",
    "require_graph",
    "single_edge_attach",
    "spectrum_basic",
    "subgraph_interlace",
    "tree_star_bound",
    "validate_partition",
]
