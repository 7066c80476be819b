"""Continuous-time quantum walk on the hypercube.

State vectors are indexed by subset bitmasks of {0, ..., L}; the walk
generator is the sum over elements of (identity minus bit-flip), evolved
exactly through its signed Walsh eigenbasis.
"""

from .evolution import (
    ENGINE_KINDS,
    EvolutionEngine,
    evolve,
    materialize_unitary,
    reduce_time,
)
from .graph import (
    GRAPH_FORMATS,
    adjacency_matrix,
    edge_count,
    edges,
    export_graph,
    graph_json_dict,
    graph_laplacian_apply,
    graph_laplacian_matrix,
    is_adjacent,
    neighborhood,
    unitary_F,
)
from .measure import (
    PAIR_SUM_MAX_LEVEL,
    TIME_AVERAGE_METHODS,
    Distribution,
    SymmetryReport,
    TimeAverageDistribution,
    closed_form_distribution,
    closed_form_pt,
    distribution_at,
    distribution_csv,
    distribution_json_dict,
    is_symmetric,
    pst_check,
    quadrature_point_count,
    time_average,
    vacuum_average_value,
)
from .operators import (
    DENSE_CAP,
    StateVector,
    apply_hat_involution,
    apply_involution,
    apply_involution_product,
    apply_laplacian,
    basis_state,
    inner_product,
    materialize_matrix,
    matrix_to_json,
    vacuum_state,
)
from .spectral import (
    Spectrum,
    SpectrumEntry,
    eigenvalue_of,
    eigenvalues_by_index,
    from_eigenbasis,
    spectrum,
    to_eigenbasis,
)
from .subsets import (
    DEFAULT_MAX_LEVEL,
    Level,
    cardinality,
    complement,
    elements,
    format_node,
    max_level,
    parse_node,
    symmetric_difference,
)

__version__ = "0.1.0"

__all__ = [
    "DEFAULT_MAX_LEVEL",
    "DENSE_CAP",
    "ENGINE_KINDS",
    "GRAPH_FORMATS",
    "PAIR_SUM_MAX_LEVEL",
    "TIME_AVERAGE_METHODS",
    "Distribution",
    "EvolutionEngine",
    "Level",
    "Spectrum",
    "SpectrumEntry",
    "StateVector",
    "SymmetryReport",
    "TimeAverageDistribution",
    "adjacency_matrix",
    "apply_hat_involution",
    "apply_involution",
    "apply_involution_product",
    "apply_laplacian",
    "basis_state",
    "cardinality",
    "closed_form_distribution",
    "closed_form_pt",
    "complement",
    "distribution_at",
    "distribution_csv",
    "distribution_json_dict",
    "edge_count",
    "edges",
    "eigenvalue_of",
    "eigenvalues_by_index",
    "elements",
    "evolve",
    "export_graph",
    "format_node",
    "from_eigenbasis",
    "graph_json_dict",
    "graph_laplacian_apply",
    "graph_laplacian_matrix",
    "inner_product",
    "is_adjacent",
    "is_symmetric",
    "materialize_matrix",
    "materialize_unitary",
    "matrix_to_json",
    "max_level",
    "neighborhood",
    "parse_node",
    "pst_check",
    "quadrature_point_count",
    "reduce_time",
    "spectrum",
    "symmetric_difference",
    "time_average",
    "to_eigenbasis",
    "unitary_F",
    "vacuum_average_value",
    "vacuum_state",
]
