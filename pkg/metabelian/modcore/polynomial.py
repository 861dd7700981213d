"""
Multivariate polynomials over GF(p).

The coefficient ring R = k[x1..xr] of everything in this package. Polynomials
are sympy ``PolyElement`` values of a ring with the degrevlex order; this
module only adds the text grammar, a canonical printer and a few helpers that
sympy spells differently.
"""

import itertools
import re
from tokenize import TokenError
from typing import Dict, Iterator, List, Sequence

from sympy import GF, Number, Symbol
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)
from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyRing

from metabelian.constants import ENUMERATION_CAP, Monomial, Polynomial
from metabelian.exceptions import ConfigurationError, ParseError, ResourceCapExceeded
from metabelian.modcore.field import FieldSpec

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_INVALID_CHARACTER = re.compile(r"[^0-9x\s+\-*^()]")


class PolynomialRing:
    """
    The polynomial ring GF(p)[x1..xr] with the degrevlex monomial order.

    Parameters
    ----------
    p: int
        Prime modulus.
    r: int
        Number of variables.
    """

    def __init__(self, p: int, r: int):
        self.field = FieldSpec(p)
        if isinstance(r, bool) or not isinstance(r, int):
            raise TypeError(f"Expected int for r, received: {type(r).__name__}")
        if r < 1:
            raise ConfigurationError(f"r must be >= 1, received: {r}")
        self.r = r
        self.symbols = tuple(Symbol(f"x{i}") for i in range(1, r + 1))
        self.ring = PolyRing(self.symbols, GF(self.field.p), grevlex)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, PolynomialRing)
            and other.p == self.p
            and other.r == self.r
        )

    def __hash__(self) -> int:
        return hash(("PolynomialRing", self.p, self.r))

    def __repr__(self) -> str:
        return f"PolynomialRing(p={self.p}, r={self.r})"

    @property
    def p(self) -> int:
        return self.field.p

    @property
    def zero(self) -> Polynomial:
        return self.ring.zero

    @property
    def one(self) -> Polynomial:
        return self.ring.one

    @property
    def gens(self) -> Sequence[Polynomial]:
        return self.ring.gens

    def variable(self, i: int) -> Polynomial:
        """Return the variable x_i, 1-based."""
        if not 1 <= i <= self.r:
            raise ValueError(f"variable index must be in [1, {self.r}], received: {i}")
        return self.ring.gens[i - 1]

    def constant(self, c: int) -> Polynomial:
        return self.ring.ground_new(c % self.p)

    def monomial(self, exponents: Monomial, coefficient: int = 1) -> Polynomial:
        return self.ring.term_new(tuple(exponents), coefficient % self.p)

    def from_terms(self, terms: Dict[Monomial, int]) -> Polynomial:
        return self.ring.from_dict(
            {tuple(m): c % self.p for m, c in terms.items() if c % self.p}
        )

    def linear_form(self, vector: Sequence[int]) -> Polynomial:
        """Return α1·x1 + ... + αr·xr."""
        if len(vector) != self.r:
            raise ConfigurationError(
                f"linear form needs {self.r} coefficients, received: {len(vector)}"
            )
        result = self.zero
        for c, x in zip(vector, self.gens):
            if c % self.p:
                result = result + x * (c % self.p)
        return result

    def coerce(self, poly: Polynomial) -> Polynomial:
        """Check that ``poly`` belongs to this ring."""
        if getattr(poly, "ring", None) != self.ring:
            raise ConfigurationError(
                f"polynomial does not belong to {self!r}: {poly!r}"
            )
        return poly

    def monomials(self, degree_bound: int) -> List[Monomial]:
        """All exponent vectors of degree <= bound, ascending in degrevlex."""
        result = []
        for degree in range(degree_bound + 1):
            for combination in itertools.combinations_with_replacement(
                range(self.r), degree
            ):
                exponents = [0] * self.r
                for i in combination:
                    exponents[i] += 1
                result.append(tuple(exponents))
        return sorted(result, key=grevlex)

    def polynomials(
        self, degree_bound: int, cap: int = ENUMERATION_CAP
    ) -> Iterator[Polynomial]:
        """Every polynomial of degree <= bound, in a deterministic order."""
        monomials = self.monomials(degree_bound)
        count = self.p ** len(monomials)
        if count > cap:
            raise ResourceCapExceeded(
                f"{count} polynomials of degree <= {degree_bound}, cap is {cap}"
            )
        for coefficients in itertools.product(range(self.p), repeat=len(monomials)):
            yield self.from_terms(dict(zip(monomials, coefficients)))

    def parse(self, text: str) -> Polynomial:
        return parse_polynomial(text, self)

    def format(self, poly: Polynomial) -> str:
        return format_polynomial(self.coerce(poly))


def poly_arith(a: Polynomial, b: Polynomial, op: str) -> Polynomial:
    """
    Ring operation on two polynomials of the same ring.

    Parameters
    ----------
    a, b: Polynomial
    op: str
        One of ``"add"``, ``"sub"``, ``"mul"``.
    """
    if a.ring != b.ring:
        raise ConfigurationError(
            f"polynomials belong to different rings: {a.ring} and {b.ring}"
        )
    if op == "add":
        return a + b
    elif op == "sub":
        return a - b
    elif op == "mul":
        return a * b
    else:
        raise ValueError(f'op must be one of "add", "sub", "mul", received: {op}')


def characteristic(poly: Polynomial) -> int:
    return poly.ring.domain.mod


def coefficient_value(coefficient, p: int) -> int:
    """Representative of a GF(p) coefficient in [0, p)."""
    return int(coefficient) % p


def total_degree(poly: Polynomial) -> int:
    """Total degree; -1 for the zero polynomial."""
    return max((sum(monom) for monom in poly), default=-1)


def constant_term(poly: Polynomial) -> int:
    return coefficient_value(poly.get(poly.ring.zero_monom, 0), characteristic(poly))


def format_polynomial(poly: Polynomial) -> str:
    """Canonical text: terms in descending degrevlex order, coefficients in [0, p)."""
    p = characteristic(poly)
    names = [str(s) for s in poly.ring.symbols]
    terms = []
    for monom, coeff in poly.terms():
        c = coefficient_value(coeff, p)
        factors = [
            name if e == 1 else f"{name}^{e}" for name, e in zip(names, monom) if e
        ]
        if not factors:
            terms.append(str(c))
        elif c == 1:
            terms.append("*".join(factors))
        else:
            terms.append("*".join([str(c)] + factors))
    return " + ".join(terms) if terms else "0"


def parse_polynomial(text: str, ring: PolynomialRing) -> Polynomial:
    """
    Parse ``c*x1^e1*...*xr^er`` terms joined by ``+`` or ``-``.

    Coefficients are decimal integers reduced mod p.
    """
    if not text.strip():
        raise ParseError("empty polynomial", 0)
    invalid = _INVALID_CHARACTER.search(text)
    if invalid is not None:
        raise ParseError(
            f"unexpected character {invalid.group()!r} in polynomial {text!r}",
            invalid.start(),
        )

    local_dict = {str(s): s for s in ring.symbols}
    try:
        expr = parse_expr(
            text, local_dict=local_dict, transformations=_TRANSFORMATIONS
        )
    except (SyntaxError, TokenError, TypeError, ValueError) as e:
        raise ParseError(
            f"malformed polynomial {text!r}: {e}", getattr(e, "offset", None)
        ) from e

    unknown = sorted(str(s) for s in expr.free_symbols - set(ring.symbols))
    if unknown:
        name = unknown[0]
        raise ParseError(
            f"unknown variable {name} for r = {ring.r} in {text!r}", text.find(name)
        )
    if any(not number.is_Integer for number in expr.atoms(Number)):
        raise ParseError(f"non-integer coefficient or exponent in {text!r}")

    try:
        return ring.ring.from_expr(expr)
    except ValueError as e:
        raise ParseError(f"not a polynomial: {text!r}") from e


def substitute(
    poly: Polynomial, images: Sequence[Polynomial], target: PolynomialRing
) -> Polynomial:
    """
    Replace x_i by ``images[i - 1]``: an algebra map into ``target``.
    """
    if len(images) != poly.ring.ngens:
        raise ConfigurationError(
            f"substitution needs {poly.ring.ngens} images, received: {len(images)}"
        )
    p = characteristic(poly)
    result = target.zero
    for monom, coeff in poly.terms():
        term = target.constant(coefficient_value(coeff, p))
        for image, e in zip(images, monom):
            if e:
                term = term * target.coerce(image) ** e
        result = result + term
    return result


def divides(d: Polynomial, f: Polynomial) -> bool:
    if not d:
        return not f
    return not f.rem(d)
