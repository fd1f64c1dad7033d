"""torsep: exact computations for torus representations and separating invariants.

Given an integer weight matrix, the package computes the Hilbert basis of the
invariant monomial semigroup, nullcone and separating-variety decompositions,
decides whether a monomial subsemigroup gives a separating algebra (in
characteristic zero or p), builds small-support separating sets, and evaluates
the separating-size bounds and minimal monomial separating sets of
Segre-Veronese cones.  All arithmetic is exact.
"""

from .convexgeom import (
    ConvexCombination,
    caratheodory,
    in_convex_hull,
    in_relative_interior,
    separating_functional,
)
from .errors import (
    DimensionTooLarge,
    GeneratorNotInvariant,
    InvariantViolation,
    NotInHull,
    NotNullconeComponent,
    SearchSpaceTooLarge,
    TorsepError,
)
from .lattice import (
    IntMatrix,
    LatticeBasis,
    determinant,
    hnf,
    kernel_basis,
    lattice_equal,
    lattice_member,
    rank,
    restrict_kernel,
)
from .segre_veronese import (
    BoundsReport,
    SVSpec,
    monomial_min_construction,
    monomial_min_size,
    reduce_inseparable,
    segre_weight_matrix,
    separating_size_bounds,
    support_r_plus_2_separates,
    sv_weight_matrix,
    variable_index,
)
from .semigroup import (
    HilbertBasis,
    MonomialSemigroup,
    generated_lattice,
    hilbert_basis,
    hilbert_basis_restricted,
    member,
    restrict_semigroup,
)
from .septest import (
    CharPVerdict,
    LatticeCertificate,
    MinSearchResult,
    PPowerCertificate,
    Refutation,
    SeparatingVerdict,
    SupportCertificate,
    TorusPoint,
    check_separating_char0,
    check_separating_charp,
    construct_2rplus1,
    kernel_small_support_spans,
    minimal_monomial_size,
    oracle_refute,
    small_support_generators,
    verify_certificate,
)
from .torusrep import (
    Classification,
    NullconeDecomposition,
    SepVarDecomposition,
    TorusRep,
    graph_closure_classify,
    is_orbit_closed,
    nullcone,
    sepvar_decompose,
    sepvar_is_simple,
)

__version__ = "0.1.0"
