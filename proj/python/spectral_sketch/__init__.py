"""Graph spectrum estimation from random walks.

Thin re-export of the compiled extension: graph generators and I/O, exact
spectra and moments, walk-based moment estimation, LP moment inversion,
earth mover distances, spectrum discretization, and the partition-based
estimator with its error certificate.
"""

from spectral_sketch._core import (
    DataError,
    EstimateResult,
    Graph,
    GridSpec,
    MomentInverseResult,
    MomentVector,
    NumericalError,
    Partition,
    PartitionEstimate,
    SpectralDistribution,
    approx_spectral_moment,
    average_distributions,
    discretize_spectrum,
    disjoint_union,
    emd_w1,
    estimate_moments,
    estimate_spectrum,
    exact_moments,
    exact_spectrum,
    generate,
    generate_complete,
    generate_cycle,
    generate_grid2d,
    generate_path,
    generate_preferential,
    generate_star,
    load_edge_list,
    moment_inverse,
    partition_graph,
    partition_spectrum_estimate,
    point_mass_distribution,
    remove_cut_edges,
    required_walks,
    save_edge_list,
    sorted_vector_distance,
    union_spectrum,
    walk_to_laplacian,
)

__all__ = [
    "DataError",
    "EstimateResult",
    "Graph",
    "GridSpec",
    "MomentInverseResult",
    "MomentVector",
    "NumericalError",
    "Partition",
    "PartitionEstimate",
    "SpectralDistribution",
    "approx_spectral_moment",
    "average_distributions",
    "discretize_spectrum",
    "disjoint_union",
    "emd_w1",
    "estimate_moments",
    "estimate_spectrum",
    "exact_moments",
    "exact_spectrum",
    "generate",
    "generate_complete",
    "generate_cycle",
    "generate_grid2d",
    "generate_path",
    "generate_preferential",
    "generate_star",
    "load_edge_list",
    "moment_inverse",
    "partition_graph",
    "partition_spectrum_estimate",
    "point_mass_distribution",
    "remove_cut_edges",
    "required_walks",
    "save_edge_list",
    "sorted_vector_distance",
    "union_spectrum",
    "walk_to_laplacian",
]

__version__ = "0.1.0"
