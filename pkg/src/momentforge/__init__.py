"""Exact moment matrices of hypersurfaces under the special linear action,
symmetric-group orbit enumeration of monomial supports, diagonal-family
filtering, and critical points of the moment-map square length."""

from .critical import (
    AlgebraicNumber,
    CriticalSolution,
    GradientSystem,
    critical_points,
    equivalent_modulo_torus,
    equivalent_modulo_torus_and_permutation,
    fixed_point_check,
    gradient_system,
    solve_family,
    solve_real,
    torus_canonical,
    verify_critical,
)
from .diagonal import DiagonalVerdict, diagonal_families, is_identically_diagonal
from .moment import (
    MomentMatrix,
    SymbolicMomentMatrix,
    complex_gradient_imag_parts,
    flow_derivative,
    gradient,
    gradient_symbolic,
    hermitian_matrix,
    moment_matrix,
    norm_squared,
    square_length,
    square_length_symbolic,
    symbolic_moment_matrix,
)
from .orbits import (
    OrbitRepresentative,
    ParamFamily,
    build_family,
    canonical_representative,
    orbit_classes,
    permute,
    uses_all_variables,
)
from .polyring import (
    DegenerateInputError,
    ExponentVector,
    ParamPoly,
    RationalFunction,
    SparsePoly,
    partial_derivative,
    poly_add,
    poly_from_json,
    poly_scale,
    poly_times_variable,
    poly_to_json,
    substitute_params,
)
from .symd import (
    CoefficientVector,
    MonomialBasis,
    coefficient_vector,
    enumerate_monomials,
    inner_product,
    multidegree,
    poly_from_coefficients,
    projective_normalize,
    weight,
)

__version__ = "0.1.0"
