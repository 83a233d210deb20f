"""Exact linear algebra for factoring the classical adjoint of even-size matrices."""

from .errors import (
    BadAlternatingDet,
    InvalidWitness,
    NotAlternating,
    NotAUnit,
    NotInvertible,
    OddSize,
    RingMismatch,
)
from .factor import (
    BCRBundle,
    FactorizationCertificate,
    bifactor_check,
    build_B,
    build_C,
    build_r,
    factor_adjoint,
    right_variant_check,
    trace_checks,
    uniqueness_check,
)
from .matrix import (
    Matrix,
    MinorSymbol,
    adjoint,
    alternating_basis,
    comp_minor,
    det,
    generic_matrix,
    hyperbolic,
    identity,
    is_alternating,
    matrix_inverse,
    minor,
)
from .poly import Polynomial
from .ring import QQ, ZZ, PolyRing, RingDescriptor, RingElement, Zmod, poly_eval, poly_partial

__version__ = "0.1.0"
