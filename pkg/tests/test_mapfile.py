"""Map-file grammar, validation diagnostics, and the print/parse round trip."""

import pytest

from fiberbound import (CharDividesDegree, CommonFactor, MixedDegrees,
                        NotHomogeneous, ParseError, parse_map_file,
                        parse_polynomial, print_map_file)
from fiberbound.fields import PrimeField, RationalField

EXAMPLE2 = """\
# the degree-6 fixture
field p=2147483647
vars X0 X1 X2
f0 X1^2*X2^4 - X1^4*X2^2
f1 X0^4*X2^2 - X2^6
f2 X0^2*X1^2*X2^2 - X0^2*X1^4
f3 X0^4*X1^2 - X1^2*X2^4
"""


def test_parse_example2_text():
    inp = parse_map_file(EXAMPLE2)
    assert (inp.m, inp.n, inp.d) == (2, 3, 6)
    assert isinstance(inp.field, PrimeField) and inp.field.p == 2147483647
    assert inp.varnames == ("X0", "X1", "X2")


def test_default_field_when_missing():
    text = "vars X Y\nf0 X^2\nf1 Y^2\nf2 X*Y\n"
    inp = parse_map_file(text)
    assert isinstance(inp.field, PrimeField) and inp.field.p == 2147483647
    assert inp.varnames == ("X", "Y")


def test_rational_field_mode():
    text = "field rational\nvars X Y\nf0 X^2\nf1 Y^2\nf2 X*Y\n"
    inp = parse_map_file(text)
    assert isinstance(inp.field, RationalField)


def test_trailing_operator_position():
    text = "vars X0 X1\nf0 X0^2 +\nf1 X1^2\n"
    with pytest.raises(ParseError) as exc:
        parse_map_file(text)
    assert exc.value.line == 2
    assert exc.value.col is not None


def test_undeclared_variable():
    text = "vars X0 X1\nf0 X0*Z9\nf1 X1^2\n"
    with pytest.raises(ParseError) as exc:
        parse_map_file(text)
    assert "Z9" in str(exc.value)


def test_missing_label_detected():
    text = "vars X0 X1\nf0 X0^2\nf2 X1^2\n"
    with pytest.raises(ParseError) as exc:
        parse_map_file(text)
    assert "f1" in str(exc.value)


def test_common_factor_reported():
    text = "vars X0 X1\nf0 X0^2\nf1 X0*X1\n"
    with pytest.raises(CommonFactor) as exc:
        parse_map_file(text)
    assert str(exc.value.gcd) == "X0"


def test_not_homogeneous():
    text = "vars X0 X1\nf0 X0^2 + X1\nf1 X1^2\n"
    with pytest.raises(NotHomogeneous):
        parse_map_file(text)


def test_mixed_degrees():
    text = "vars X0 X1\nf0 X0^2\nf1 X1^3\n"
    with pytest.raises(MixedDegrees):
        parse_map_file(text)


def test_char_divides_degree():
    text = "field p=3\nvars X0 X1 X2\nf0 X0^3\nf1 X1^3\nf2 X2^3\n"
    with pytest.raises(CharDividesDegree):
        parse_map_file(text)


def test_non_prime_modulus_rejected():
    text = "field p=91\nvars X0 X1\nf0 X0\nf1 X1\n"
    with pytest.raises(ParseError):
        parse_map_file(text)


def test_round_trip_on_shipped_fixtures():
    import pathlib
    maps = pathlib.Path(__file__).resolve().parent.parent / "maps"
    for path in sorted(maps.glob("*.map")):
        inp = parse_map_file(path.read_text())
        again = parse_map_file(print_map_file(inp))
        assert again == inp, path.name


def test_parse_polynomial_with_parentheses():
    F = PrimeField()
    p = parse_polynomial("(X0 - X1)*(X0 + X1)", F, ("X0", "X1"))
    q = parse_polynomial("X0^2 - X1^2", F, ("X0", "X1"))
    assert p == q


def test_parse_negative_leading_sign():
    F = PrimeField()
    p = parse_polynomial("-X0^2 + 2*X1^2", F, ("X0", "X1"))
    assert p.to_str(("X0", "X1")) == "-X0^2 + 2*X1^2"
