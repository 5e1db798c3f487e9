import pytest
from hypothesis import given

from pillai_ff.errors import DivisionByZeroInExpression, ParseError
from pillai_ff.field import ONE, X, Poly, RatFunc
from pillai_ff.parser import parse_expression

from conftest import ratfuncs


def test_examples():
    assert parse_expression("x^2 - x - 1") == RatFunc(X**2 - X - ONE)
    assert parse_expression("(x^2-1)/(x-1)") == RatFunc(X + ONE)
    with pytest.raises(ParseError) as info:
        parse_expression("x^^2")
    assert info.value.position == 2
    assert str(info.value).endswith("at offset 2")


@pytest.mark.parametrize("text,expected", [
    ("3/4*x^2", RatFunc(Poly([0, 0, 3]), Poly([4]))),
    ("-x^2", RatFunc(-X**2)),
    ("x^-2", RatFunc(ONE, X**2)),
    ("2^3", RatFunc(Poly([8]))),
    ("--x", RatFunc(X)),
    (" ( x + 1 ) ^ 2 / x ", RatFunc((X + ONE) ** 2, X)),
    ("1/2/2", RatFunc(Poly([1]), Poly([4]))),
    ("x - 1 - 1", RatFunc(X - 2)),
])
def test_precedence_and_associativity(text, expected):
    assert parse_expression(text) == expected


@pytest.mark.parametrize("text,position", [
    ("x+", 2), ("(x", 2), ("1.5", 1), ("y", 0), ("x x", 2), ("", 0), ("x^(2)", 2), ("x^y", 2),
])
def test_parse_errors(text, position):
    with pytest.raises(ParseError) as info:
        parse_expression(text)
    assert info.value.position == position


@pytest.mark.parametrize("text", ["1/0", "x/(x-x)", "0^-1", "(x-x)^-2"])
def test_division_by_zero(text):
    with pytest.raises(DivisionByZeroInExpression):
        parse_expression(text)


@given(ratfuncs(5, nonzero=False))
def test_print_parse_round_trip(f):
    assert parse_expression(str(f)) == f
