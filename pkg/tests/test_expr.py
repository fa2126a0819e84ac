"""Element grammar: parsing, canonical round-trips, rejection with positions."""

from __future__ import annotations

import pytest

from qlaurent.coeff import QCoefficient
from qlaurent.expr import ElementSyntaxError, parse_coefficient, parse_element
from qlaurent.torus import DimensionMismatch, TorusContext

from conftest import GOLDEN, golden_text

qq = QCoefficient.q_power

CTX = TorusContext(2, ((0, 1), (-1, 0)))


def test_atoms():
    assert parse_element("1", CTX) == CTX.one()
    assert parse_element("X(0,0)", CTX) == CTX.one()
    assert parse_element("-3", CTX) == CTX.scalar(-3)
    assert parse_element("X(1,0)", CTX) == CTX.basis((1, 0))
    assert parse_element("X(-1,2)", CTX) == CTX.basis((-1, 2))
    assert parse_element("q", CTX) == CTX.scalar(qq(2))
    assert parse_element("h[1,1]", CTX) == CTX.scalar(QCoefficient.h_symbol(1, 1))
    assert parse_element("X1", CTX) == CTX.basis((1, 0))
    assert parse_element("X2", CTX) == CTX.basis((0, 1))


def test_q_exponents():
    assert parse_element("q^2", CTX) == CTX.scalar(qq(4))
    assert parse_element("q^(-1)", CTX) == CTX.scalar(qq(-2))
    assert parse_element("q^(1/2)", CTX) == CTX.scalar(qq(1))
    assert parse_element("q^(-3/2)", CTX) == CTX.scalar(qq(-3))


def test_products_and_sums():
    assert parse_element("X1*X2", CTX) == CTX.basis((1, 0)) * CTX.basis((0, 1))
    e = parse_element("q^(-1/2)*X(1,0) + 2", CTX)
    assert e == CTX.basis((1, 0)) * qq(-1) + CTX.scalar(2)
    e = parse_element("(1 + q)*X(0,1)", CTX)
    assert e == CTX.basis((0, 1)) * (1 + qq(2))
    e = parse_element("-X(1,0) - 2", CTX)
    assert e == -CTX.basis((1, 0)) - CTX.scalar(2)


def test_powers():
    assert parse_element("X(1,0)^3", CTX) == CTX.basis((3, 0))
    assert parse_element("X(1,1)^(-1)", CTX) == CTX.basis((1, 1)) ** (-1)
    assert parse_element("h[1,1]^2", CTX) == CTX.scalar(
        QCoefficient.h_symbol(1, 1) ** 2
    )
    assert parse_element("(X1*X2)^2", CTX) == (CTX.basis((1, 0)) * CTX.basis((0, 1))) ** 2


def test_whitespace():
    assert parse_element(" X( 1 , 0 ) + 1 ", CTX) == CTX.basis((1, 0)) + CTX.one()


def test_golden_round_trips():
    for path in sorted(GOLDEN.glob("*.txt")):
        text = golden_text(path.name)
        e = parse_element(text, CTX)
        assert str(e) == text
        assert parse_element(str(e), CTX) == e


def test_half_exponent_rejected_off_q():
    with pytest.raises(ElementSyntaxError):
        parse_element("X(1,0)^(1/2)", CTX)


def test_third_exponent_rejected_with_position():
    text = "q^(1/3)"
    with pytest.raises(ElementSyntaxError) as info:
        parse_element(text, CTX)
    err = info.value
    assert isinstance(err, SyntaxError)
    assert err.position == text.index("3")


def test_syntax_errors():
    for bad in ["", "X(", "1 +", "q^", "X(1,0", "* 2", "h[1]", "2 2"]:
        with pytest.raises(ElementSyntaxError):
            parse_element(bad, CTX)


def test_nonunit_inverse_rejected():
    with pytest.raises(ElementSyntaxError):
        parse_element("2^(-1)", CTX)
    with pytest.raises(ElementSyntaxError):
        parse_element("(X1 + X2)^(-1)", CTX)


def test_dimension_errors():
    with pytest.raises(DimensionMismatch):
        parse_element("X(1,0,0)", CTX)
    with pytest.raises(DimensionMismatch):
        parse_element("X3", CTX)


def test_parse_coefficient():
    assert parse_coefficient("1 + q^(1/2)") == 1 + qq(1)
    assert parse_coefficient("h[2,1]*q^(-1)") == QCoefficient.h_symbol(2, 1) * qq(-2)
    assert parse_coefficient("0").is_zero()
    assert parse_coefficient("1 - 1").is_zero()
    with pytest.raises(DimensionMismatch):
        parse_coefficient("X(1)")


def test_coefficient_round_trip():
    samples = [
        "1",
        "q^(-1/2) + q^(1/2)",
        "1 - q",
        "2*h[1,1]*q",
        "q^(-1) + 2 + h[1,1]",
    ]
    for text in samples:
        assert str(parse_coefficient(text)) == text
