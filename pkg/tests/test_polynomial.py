import pytest

from metabelian.exceptions import ConfigurationError, ParseError, ResourceCapExceeded
from metabelian.modcore.polynomial import (
    PolynomialRing,
    constant_term,
    divides,
    format_polynomial,
    parse_polynomial,
    poly_arith,
    substitute,
    total_degree,
)


class TestPolynomialRing:
    def test_init(self, ring_2_2):
        assert ring_2_2.p == 2
        assert ring_2_2.r == 2
        assert ring_2_2 == PolynomialRing(2, 2)
        assert ring_2_2 != PolynomialRing(3, 2)
        assert hash(ring_2_2) == hash(PolynomialRing(2, 2))

    def test_init_errors(self):
        with pytest.raises(ConfigurationError, match="prime"):
            PolynomialRing(6, 2)
        with pytest.raises(ConfigurationError, match="r must be"):
            PolynomialRing(2, 0)
        with pytest.raises(TypeError):
            PolynomialRing(2, 2.0)

    def test_variable(self, ring_2_2):
        x1, x2 = ring_2_2.gens
        assert ring_2_2.variable(1) == x1
        assert ring_2_2.variable(2) == x2
        with pytest.raises(ValueError):
            ring_2_2.variable(3)

    def test_constant_and_linear_form(self, ring_3_2):
        assert ring_3_2.constant(4) == ring_3_2.one
        assert ring_3_2.constant(3) == ring_3_2.zero
        x1, x2 = ring_3_2.gens
        assert ring_3_2.linear_form([1, 2]) == x1 + 2 * x2
        assert ring_3_2.linear_form([3, 0]) == ring_3_2.zero
        with pytest.raises(ConfigurationError):
            ring_3_2.linear_form([1])

    def test_coerce(self, ring_2_2, ring_3_2):
        x = ring_2_2.variable(1)
        assert ring_2_2.coerce(x) is x
        with pytest.raises(ConfigurationError):
            ring_3_2.coerce(x)

    def test_monomials(self, ring_2_2):
        monomials = ring_2_2.monomials(1)
        assert monomials[0] == (0, 0)
        assert sorted(monomials) == [(0, 0), (0, 1), (1, 0)]
        assert len(ring_2_2.monomials(2)) == 6

    def test_polynomials(self, ring_2_2):
        polynomials = list(ring_2_2.polynomials(1))
        assert len(polynomials) == 8
        assert len(set(polynomials)) == 8
        assert polynomials == list(ring_2_2.polynomials(1))
        with pytest.raises(ResourceCapExceeded):
            list(ring_2_2.polynomials(2, cap=63))


class TestParse:
    @pytest.mark.parametrize(
        "text, expected",
        [
            ("0", "0"),
            ("1", "1"),
            ("x1", "x1"),
            ("x1 + x1", "0"),
            ("x1 - 1", "x1 + 1"),
            ("x1^2 + x1*x2 + x2", "x1^2 + x1*x2 + x2"),
            ("3*x2", "x2"),
            ("(x1 + 1)^2", "x1^2 + 1"),
        ],
    )
    def test_parse_and_format(self, ring_2_2, text, expected):
        assert format_polynomial(parse_polynomial(text, ring_2_2)) == expected

    def test_coefficients_in_range(self, ring_3_2):
        assert format_polynomial(ring_3_2.parse("-x1")) == "2*x1"
        assert format_polynomial(ring_3_2.parse("x2 - x1 - 1")) == "2*x1 + x2 + 2"

    def test_canonical_text_round_trips(self, ring_3_2):
        f = ring_3_2.parse("2*x1^2*x2 + x1 + 2*x2^3 + 1")
        assert ring_3_2.parse(ring_3_2.format(f)) == f

    @pytest.mark.parametrize(
        "text, message",
        [
            ("", "empty"),
            ("   ", "empty"),
            ("x3", "unknown variable x3"),
            ("y1", "unexpected character"),
            ("x1 +", "malformed"),
            ("x1/2", "unexpected character"),
            ("x1^-1", "not a polynomial|non-integer"),
        ],
    )
    def test_errors(self, ring_2_2, text, message):
        with pytest.raises(ParseError, match=message):
            parse_polynomial(text, ring_2_2)


def test_poly_arith(ring_2_2, ring_3_2):
    x1, x2 = ring_2_2.gens
    assert poly_arith(x1, x2, "add") == x1 + x2
    assert poly_arith(x1, x1, "sub") == ring_2_2.zero
    assert poly_arith(x1 + 1, x1 + 1, "mul") == x1**2 + 1
    with pytest.raises(ValueError):
        poly_arith(x1, x2, "div")
    with pytest.raises(ConfigurationError):
        poly_arith(x1, ring_3_2.variable(1), "add")


def test_helpers(ring_3_2):
    f = ring_3_2.parse("2*x1^2 + x2 + 2")
    assert constant_term(f) == 2
    assert total_degree(f) == 2
    assert total_degree(ring_3_2.zero) == -1
    assert constant_term(ring_3_2.zero) == 0


def test_divides(ring_2_2):
    f = ring_2_2.parse("x1^2 + 1")
    assert divides(ring_2_2.parse("x1 + 1"), f)
    assert not divides(ring_2_2.parse("x2"), f)
    assert divides(ring_2_2.zero, ring_2_2.zero)
    assert not divides(ring_2_2.zero, f)


def test_substitute(ring_2_2, ring_2_3):
    f = ring_2_2.parse("x1*x2 + x1 + 1")
    y1, y2, y3 = ring_2_3.gens
    g = substitute(f, [y1 + y3, y2], ring_2_3)
    assert g == (y1 + y3) * y2 + y1 + y3 + 1
    with pytest.raises(ConfigurationError):
        substitute(f, [y1], ring_2_3)
