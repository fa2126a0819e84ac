"""Exact engine for generalized quantum cluster algebras of geometric type.

Quantum-torus arithmetic over Z[H][q^(1/2), q^(-1/2)], seed mutation with a
constructive Laurent-phenomenon witness (every mutation is an exact torus
division), power factorizations of mutated variables, and upper-bound
membership tests.
"""

from .coeff import (
    DivisionByZero,
    MissingAssignment,
    NotDivisible,
    QCoefficient,
)
from .torus import (
    ContextMismatch,
    DimensionMismatch,
    TorusContext,
    TorusElement,
    ordered_form,
    q_commutation_exponent,
    skew_form,
    t_left_divide_exact,
    t_mul,
    t_right_divide_exact,
)

__all__ = [
    "QCoefficient",
    "NotDivisible",
    "DivisionByZero",
    "MissingAssignment",
    "TorusContext",
    "TorusElement",
    "ContextMismatch",
    "DimensionMismatch",
    "skew_form",
    "t_mul",
    "t_left_divide_exact",
    "t_right_divide_exact",
    "q_commutation_exponent",
    "ordered_form",
]
