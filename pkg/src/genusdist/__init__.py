"""Exact genus and Euler-genus distributions of multigraphs, transfer-operator
engines for graph families, and asymptotic analysis of the coefficient laws."""

from .graphcore import (
    BudgetExceeded,
    EmbeddingDistribution,
    EmbeddingRep,
    Graph,
    GluingSpec,
    amalgamate,
    attach_ear,
    bar_amalgamate,
    bar_ring,
    blow_up,
    build_graph,
    build_named,
    crosscap_distribution,
    euler_distribution_oracle,
    genus_distribution_oracle,
    swapping,
    trace_faces,
)
from .polyalg import (
    BivarPoly,
    LaurentPoly,
    RationalGF,
    SeriesPrefix,
    extend_series,
    matrix_charpoly,
    parse_poly,
    primitivity_check,
    reconstruct_rational_gf,
    recurrence_from_denominator,
)
from .transfer import (
    FamilySpec,
    build_family_graph,
    capped_family_poly,
    cn2_family,
    cn3_family,
    family_genus_poly,
    family_rational_gf,
    family_series,
    grid3_family,
    initial_state,
    make_family,
    step_state,
    transfer_matrix,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
