"""Spectra of signed complete bipartite graphs.

Three routes to the same multiset of eigenvalues: closed forms for
structured negative-edge patterns (`closedform`), a cover-based reduction
to a small matrix (`reduction`), and a dense Jacobi solve of the full
adjacency matrix (`oracle`).
"""

from .closedform import (
    ClosedFormResult,
    NoClosedFormError,
    biclique_spectrum,
    closed_form,
    disjoint_bicliques_quotient,
    nonsingularity_check,
    p5_explicit,
    path_quotient,
    regular_general_spectrum,
    regular_kk_spectrum,
)
from .linalg import (
    ConvergenceError,
    NotSymmetricError,
    Spectrum,
    char_poly_coeffs,
    group_spectrum,
    max_deviation,
    multiset_equal,
    sym_eigenvalues,
    symmetrize_quotient,
)
from .oracle import VerificationReport, full_spectrum, verify
from .reduction import (
    ReducedForm,
    bipartite_lift,
    build_z1,
    build_z2,
    nullity_lower_bound,
    spectrum_via_reduction,
)
from .sgraph import (
    Arbitrary,
    Biclique,
    BicliqueUnion,
    PathEven,
    PathOddU,
    PathOddV,
    Regular,
    SignedBipartiteGraph,
    SwitchingFunction,
    adjacency_matrix,
    build_from_pattern,
    is_balanced,
    minimal_cover,
    negate,
    random_signing,
    spectral_block,
    switch,
)

__version__ = "0.1.0"
