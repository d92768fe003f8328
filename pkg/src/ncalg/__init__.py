"""Quadratic equations and noncommutative polynomials over algebras given by structure constants."""
from .algebra import (
    AlgebraSpec,
    Element,
    associator,
    builtin_complex,
    builtin_quaternion,
    commutator,
    linear_combine,
    load_algebra,
    load_algebra_file,
    mul,
)
from .conjugation import ConjugationProfile, analyze, conj, im, norm_sq, re
from .ncpoly import (
    DivisionResult,
    Monomial,
    NcPolynomial,
    build_question_poly,
    canonical_tensor,
    constant,
    divide_by,
    divide_linear,
    evaluate,
    expand_cube,
    expand_prod,
    expand_square,
    identity_b2_minus_a2,
    lam_mul,
    poly_add,
    poly_from_monomials,
    poly_mul,
    variable,
    viete_expand,
)
from .parse import parse_element, parse_polynomial
from .scan import ScanConfig, newton_root_scan
from .solvers import (
    Affine,
    Empty,
    Finite,
    Sphere,
    commutator_residual_coords,
    shifted_square,
    sqrt_conjugation,
    sqrt_quaternion,
    square_residual_coords,
    sylvester_linear,
)

__version__ = "0.1.0"
