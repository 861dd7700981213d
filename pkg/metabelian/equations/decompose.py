"""
Split a Lie polynomial f into ``c + Σ x_i·h_i + g``.

The bracket monomials of f are sorted by their number of variable
occurrences. Monomials without variables evaluate to the constant part c.
A monomial with one occurrence of x_i is linear in x_i and normalizes to
``β·x_i + Σ_j [x_i, a_j]·P_j`` with β in k and P_j in R: the commutant is an
R-module, so ``[x_i, a_j]·P_j`` is any left-normed bracket of [x_i, a_j]
with the constants of the monomials of P_j. Monomials with two or more
occurrences form the residual g.

The coefficient polynomial ``h_i = β + Σ_j x_j·P_j`` is not unique: the
left-normed brackets [[x, a_j], a_k] and [[x, a_k], a_j] share the shadow
x_j·x_k but differ by [x, [a_j, a_k]]. The exact data (β, P) is kept next to
h_i and is what ``recombine`` uses.
"""

from typing import List, NamedTuple, Tuple

from metabelian.constants import Polynomial
from metabelian.lie.context import AlgebraContext
from metabelian.lie.element import LieElement, bracket
from metabelian.lie.expression import (
    Bracket,
    Constant,
    LiePolynomial,
    Node,
    Scale,
    Sum,
    Variable,
    Zero,
    add,
    element_expression,
    left_normed_expression,
    monomial_indices,
    scale,
    walk,
)
from metabelian.modcore.polynomial import coefficient_value


class VariableTerm(NamedTuple):
    """``beta·x_i + Σ_j [x_i, a_j]·coefficients[j - 1]``."""

    beta: int
    coefficients: Tuple[Polynomial, ...]


class Decomposition(NamedTuple):
    """
    c: constant part, an element of F_r.
    h: coefficient polynomial h_i of every variable.
    g: residual, a sum of monomials with at least two variable occurrences.
    terms: exact single-variable part of every variable.
    """

    c: LieElement
    h: Tuple[Polynomial, ...]
    g: Node
    terms: Tuple[VariableTerm, ...]

    def recombine(self) -> Node:
        """Expression equal to the decomposed polynomial in every algebra."""
        p = self.c.context.p
        parts = [element_expression(self.c)]
        for i, term in enumerate(self.terms, start=1):
            parts.append(scale(term.beta, Variable(i), p))
            for j, poly in enumerate(term.coefficients, start=1):
                head = Bracket(Variable(i), Constant(j))
                for monom, coeff in poly.terms():
                    parts.append(
                        scale(
                            coefficient_value(coeff, p),
                            left_normed_expression(head, monomial_indices(monom)),
                            p,
                        )
                    )
        parts.append(self.g)
        return add(*parts)


def expand(node: Node, p: int) -> List[Tuple[int, Node]]:
    """Bilinear expansion into scalar multiples of bracket monomials."""
    if isinstance(node, Zero):
        return []
    elif isinstance(node, (Constant, Variable)):
        return [(1, node)]
    elif isinstance(node, Scale):
        return [
            (c * node.coefficient % p, m)
            for c, m in expand(node.term, p)
            if c * node.coefficient % p
        ]
    elif isinstance(node, Sum):
        return [term for child in node.terms for term in expand(child, p)]
    elif isinstance(node, Bracket):
        return [
            (a * b % p, Bracket(left, right))
            for a, left in expand(node.left, p)
            for b, right in expand(node.right, p)
            if a * b % p
        ]
    raise TypeError(f"Expected a Lie expression node, received: {type(node).__name__}")


def occurrences(node: Node) -> int:
    return sum(1 for n in walk(node) if isinstance(n, Variable))


class _VariablePart(NamedTuple):
    index: int
    beta: int
    coefficients: Tuple[Polynomial, ...]


def _bracket_variable(
    part: _VariablePart, w: LieElement, context: AlgebraContext
) -> _VariablePart:
    """[part, w] for an element w of F_r."""
    ring = context.ring
    coefficients = [q * w.linear_form() for q in part.coefficients]
    b = part.beta
    if b:
        for j, c in enumerate(w.linear):
            if c:
                coefficients[j] = coefficients[j] + ring.constant(b * c)
        # [x, [a_j, a_k]] = [[x, a_j], a_k] - [[x, a_k], a_j]
        for index, q in w.fitting.entries:
            j, k = context.pairs[index]
            coefficients[j - 1] = coefficients[j - 1] + q * ring.variable(k) * b
            coefficients[k - 1] = coefficients[k - 1] - q * ring.variable(j) * b
    return _VariablePart(part.index, 0, tuple(coefficients))


def _negate(part: _VariablePart, p: int) -> _VariablePart:
    return _VariablePart(
        part.index, (-part.beta) % p, tuple(-q for q in part.coefficients)
    )


def _evaluate_monomial(node: Node, context: AlgebraContext):
    if isinstance(node, Constant):
        return context.constant(node.index)
    elif isinstance(node, Variable):
        return _VariablePart(node.index, 1, (context.ring.zero,) * context.r)
    left = _evaluate_monomial(node.left, context)
    right = _evaluate_monomial(node.right, context)
    if isinstance(left, _VariablePart):
        return _bracket_variable(left, right, context)
    elif isinstance(right, _VariablePart):
        return _negate(_bracket_variable(right, left, context), context.p)
    return bracket(left, right)


def decompose(f: LiePolynomial, context: AlgebraContext) -> Decomposition:
    """
    Parameters
    ----------
    f: LiePolynomial
    context: AlgebraContext
        F_r, the algebra of the coefficients.

    Returns
    -------
    Decomposition
    """
    p = context.p
    ring = context.ring
    c = context.zero()
    betas = [0] * f.arity
    coefficients = [[ring.zero] * context.r for _ in range(f.arity)]
    residual = []
    for coeff, monomial in expand(f.expression, p):
        count = occurrences(monomial)
        if count == 0:
            c = c + _evaluate_monomial(monomial, context) * coeff
        elif count == 1:
            part = _evaluate_monomial(monomial, context)
            i = part.index - 1
            betas[i] = (betas[i] + coeff * part.beta) % p
            for j, q in enumerate(part.coefficients):
                coefficients[i][j] = coefficients[i][j] + q * coeff
        else:
            residual.append(scale(coeff, monomial, p))

    terms = tuple(
        VariableTerm(beta, tuple(row)) for beta, row in zip(betas, coefficients)
    )
    h = tuple(
        ring.constant(term.beta)
        + sum(
            (ring.variable(j) * q for j, q in enumerate(term.coefficients, start=1)),
            ring.zero,
        )
        for term in terms
    )
    return Decomposition(c, h, add(*residual), terms)
