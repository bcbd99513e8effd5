"""Exact spectra of non-commuting graphs of four finite group families.

Builds the non-commuting graphs of the generalized quaternion, quasidihedral,
U_6n and metacyclic families, certifies their complete multipartite structure,
and compares closed-form distance, distance Laplacian and distance signless
Laplacian spectra against an exact characteristic-polynomial oracle.  All
arithmetic is arbitrary-precision integer; nothing here ever touches floating
point.
"""

from .closedform import (
    EigenbasisResult,
    EigenFamily,
    NonIntegralSpectrum,
    QuadraticEig,
    SpectrumSpec,
    claimed_partition_sizes,
    eigenbasis_q4n,
    is_integral,
    make_spectrum,
    multipartite_distance_charpoly,
    spectrum_for,
    spectrum_metacyclic,
    spectrum_q4n,
    spectrum_qd,
    spectrum_to_polynomial,
    spectrum_u6n,
)
from .exactalg import (
    DegenerateQuadratic,
    IntMatrix,
    IntPolynomial,
    bareiss_determinant,
    char_poly,
    char_poly_interpolation,
    is_perfect_square,
    poly_eq,
    poly_mul,
    poly_pow,
    rational_roots_of_quadratic,
)
from .graphs import (
    ALL_KINDS,
    AbelianGroupError,
    DisconnectedGraph,
    MatrixKind,
    NCGraph,
    NotCompleteMultipartite,
    PartitionStructure,
    complete_multipartite,
    distance_matrix,
    dl_matrix,
    dq_matrix,
    matrix_of_kind,
    non_commuting_graph,
    part_major,
    partition_structure,
    transmissions,
)
from .groups import (
    FAMILIES,
    FiniteGroup,
    GroupElement,
    GroupSpec,
    InvalidParameters,
    center,
    centralizer,
    enumerate_elements,
    is_ca_group,
    multiply,
)
from .verify import (
    DEFAULT_ORDER_CAP,
    IntegralityRecord,
    OrderCapExceeded,
    VerificationReport,
    default_grid,
    integrality_record,
    oracle_matrix,
    predicted_integral,
    search_integral,
    verify_grid,
    verify_instance,
)

__version__ = "0.1.0"
