"""Quantum torus: twisted products, one-sided exact division, q-commutation."""

from __future__ import annotations

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from qlaurent.coeff import DivisionByZero, NotDivisible, QCoefficient
from qlaurent.expr import parse_element
from qlaurent.torus import (
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

from conftest import golden_text

qq = QCoefficient.q_power

CTX = TorusContext(2, ((0, 1), (-1, 0)))
X1 = CTX.basis((1, 0))
X2 = CTX.basis((0, 1))


# -- context validation --------------------------------------------------------


def test_context_validation():
    with pytest.raises(DimensionMismatch):
        TorusContext(2, ((0, 1),))
    with pytest.raises(ValueError):
        TorusContext(2, ((0, 1), (1, 0)))
    with pytest.raises(DimensionMismatch):
        CTX.basis((1, 0, 0))
    with pytest.raises(DimensionMismatch):
        CTX.skew((1,), (0, 1))


def test_skew_form():
    assert skew_form(CTX, (1, 0), (0, 1)) == 1
    assert skew_form(CTX, (0, 1), (1, 0)) == -1
    assert skew_form(CTX, (2, 3), (4, 5)) == -2
    assert skew_form(CTX, (2, 3), (2, 3)) == 0


# -- products -------------------------------------------------------------------


def test_basis_products():
    assert str(X1 * X2) == "q^(1/2)*X(1,1)"
    assert str(X2 * X1) == "q^(-1/2)*X(1,1)"
    assert str((X1 + X2) * X1) == "q^(-1/2)*X(1,1) + X(2,0)"
    assert t_mul(X1, X2) == X1 * X2


def test_commutation_law_on_basis():
    for c in [(1, 0), (0, 1), (2, -1), (-1, 3)]:
        for d in [(1, 0), (0, 1), (1, 1), (-2, 1)]:
            lhs = CTX.basis(c) * CTX.basis(d)
            rhs = (CTX.basis(d) * CTX.basis(c)) * qq(2 * CTX.skew(c, d))
            assert lhs == rhs


def test_scalar_and_integer_multiplication():
    assert 2 * X1 == X1 + X1
    assert X1 * qq(2) == qq(2) * X1
    assert CTX.scalar(0).is_zero()
    assert CTX.scalar(qq(1)) * CTX.one() == CTX.scalar(qq(1))


def test_context_mismatch():
    other = TorusContext(2, ((0, 2), (-2, 0)))
    with pytest.raises(ContextMismatch):
        X1 + other.basis((1, 0))
    with pytest.raises(ContextMismatch):
        X1 * other.basis((1, 0))
    with pytest.raises(ContextMismatch):
        q_commutation_exponent(X1, other.basis((1, 0)))


def test_powers():
    assert X1**0 == CTX.one()
    assert X1**3 == CTX.basis((3, 0))
    assert (X1 * X2) ** 2 == qq(2) * CTX.basis((2, 2))
    inv = (X1 * X2) ** (-1)
    assert inv * (X1 * X2) == CTX.one()
    with pytest.raises(NotDivisible):
        (X1 + X2) ** (-1)
    with pytest.raises(NotDivisible):
        (2 * X1) ** (-1)


def test_invertibility_predicates():
    assert X1.is_monomial() and X1.is_invertible()
    assert (2 * X1).is_monomial() and not (2 * X1).is_invertible()
    assert not (X1 + X2).is_monomial()
    assert (X1 + X2).support() == [(0, 1), (1, 0)]


# -- exact division ---------------------------------------------------------------


def test_right_division_example():
    q = t_right_divide_exact(CTX.basis((1, 1)), X2)
    assert str(q) == "q^(-1/2)*X(1,0)"
    assert q * X2 == CTX.basis((1, 1))


def test_left_division_example():
    q = t_left_divide_exact(CTX.basis((1, 1)), X2)
    assert str(q) == "q^(1/2)*X(1,0)"
    assert X2 * q == CTX.basis((1, 1))


def test_division_of_sums():
    n = (X1 + X2) * (CTX.one() + X1)
    assert t_right_divide_exact(n, CTX.one() + X1) == X1 + X2
    n = (CTX.one() + X1) * (X1 + X2)
    assert t_left_divide_exact(n, CTX.one() + X1) == X1 + X2


def test_division_errors():
    with pytest.raises(DivisionByZero):
        t_right_divide_exact(X1, CTX.zero())
    with pytest.raises(NotDivisible):
        t_right_divide_exact(X1 + CTX.one(), X2 + CTX.one())
    with pytest.raises(NotDivisible):
        t_right_divide_exact(X1, 2 * X1)
    assert t_right_divide_exact(CTX.zero(), X1 + X2).is_zero()


# -- q-commutation ------------------------------------------------------------------


def test_q_commutation_exponent():
    assert q_commutation_exponent(X1, X2) == 1
    assert q_commutation_exponent(X2, X1) == -1
    assert q_commutation_exponent(X1, X1) == 0
    assert q_commutation_exponent(CTX.basis((2, 0)), CTX.basis((0, 3))) == 6
    assert q_commutation_exponent(X1, CTX.zero()) is None
    assert q_commutation_exponent(X1 + X2, X1) is None


def test_golden_variables_q_commute():
    x3 = parse_element(golden_text("g2_x3.txt"), CTX)
    x4 = parse_element(golden_text("g2_x4.txt"), CTX)
    assert q_commutation_exponent(x3, x4) == 1


# -- ordered rendering -----------------------------------------------------------------


def test_ordered_form():
    assert ordered_form(CTX.zero()) == "0"
    assert ordered_form(CTX.one()) == "1"
    assert ordered_form(CTX.basis((1, 1))) == "q^(-1/2)*X1*X2"
    assert ordered_form(CTX.basis((-2, 1))) == "q*X1^(-2)*X2"
    assert ordered_form(X1 - X2) == "-X2 + X1"
    assert ordered_form(CTX.basis((0, 3)) * 2) == "2*X2^3"


def test_ordered_form_multiterm_coefficient():
    e = CTX.basis((1, 1)) * (QCoefficient.one() + qq(2))
    assert ordered_form(e) == "(q^(-1/2) + q^(1/2))*X1*X2"


# -- specialization ----------------------------------------------------------------


def test_specialize_torus_element():
    h = QCoefficient.h_symbol(1, 1)
    e = X1 * h + X2
    s = e.specialize({(1, 1): 2})
    assert s == 2 * X1 + X2


# -- randomized algebra -------------------------------------------------------------

_vecs = st.tuples(st.integers(-3, 3), st.integers(-3, 3))
_coeffs = st.builds(
    lambda n, j: QCoefficient.from_int(n) * qq(j),
    st.integers(-3, 3),
    st.integers(-3, 3),
)
_elements = st.dictionaries(_vecs, _coeffs, max_size=3).map(
    lambda d: TorusElement(CTX, d)
)


@settings(max_examples=100, deadline=None)
@given(_elements, _elements, _elements)
def test_associativity_and_distributivity(a, b, c):
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert (a + b) * c == a * c + b * c


@settings(max_examples=100, deadline=None)
@given(_elements, _elements)
def test_division_round_trips(a, d):
    if d.is_zero():
        return
    assert t_right_divide_exact(a * d, d) == a
    assert t_left_divide_exact(d * a, d) == a


@settings(max_examples=100, deadline=None)
@given(_vecs, _vecs)
def test_commutation_law_random(c, d):
    lhs = CTX.basis(c) * CTX.basis(d)
    rhs = (CTX.basis(d) * CTX.basis(c)) * qq(2 * CTX.skew(c, d))
    assert lhs == rhs
    assert q_commutation_exponent(CTX.basis(c), CTX.basis(d)) == CTX.skew(c, d)
