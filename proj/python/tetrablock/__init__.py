"""Rational tetra-inner functions: construction, validation and analysis.

Polynomials are lists of complex coefficients, constant term first.
Library failures raise TetraError with args (kind, message).
"""

from ._core import (
    TetraError,
    TetraRational,
    certify_extreme_symmetric,
    classify_gamma,
    classify_tetra,
    construct,
    convex_combine,
    degree,
    fejer_riesz,
    from_gamma_inner,
    gamma_royal,
    is_superficial,
    modulus_squared_on_circle,
    mu_diag_le_one,
    mu_diag_value,
    perturb_nonextreme,
    recover_data,
    roots,
    royal_nodes,
    royal_polynomial,
    scale_nonextreme,
    superficial_build,
    tetra_defect,
    type_nk,
    winding_number,
)

__all__ = [name for name in dir() if not name.startswith("_")]
__version__ = "0.1.0"
