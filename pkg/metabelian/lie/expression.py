"""
Formal Lie expressions over constants a_i and variables x_j.

Grammar::

    equation   := expression ["=" expression]
    expression := term (("+" | "-") term)*
    term       := "-" term | INTEGER ["*" term] | factor
    factor     := "a" INDEX | "x" INDEX | "[" expression "," expression "]"
                | "(" expression ")"

A bare integer must vanish modulo p and reads as zero. Scalars are kept in
[0, p) and subtraction is multiplication by p - 1, so parsing the printed
form of a tree gives the tree back.
"""

import re
from dataclasses import dataclass
from typing import Iterator, Optional, Sequence, Set, Tuple, Union

from metabelian.exceptions import ConfigurationError, ParseError
from metabelian.lie.element import LieElement
from metabelian.modcore.polynomial import coefficient_value


@dataclass(frozen=True)
class Zero:
    pass


@dataclass(frozen=True)
class Constant:
    index: int


@dataclass(frozen=True)
class Variable:
    index: int


@dataclass(frozen=True)
class Bracket:
    left: "Node"
    right: "Node"


@dataclass(frozen=True)
class Scale:
    coefficient: int
    term: "Node"


@dataclass(frozen=True)
class Sum:
    terms: Tuple["Node", ...]


Node = Union[Zero, Constant, Variable, Bracket, Scale, Sum]
ZERO = Zero()


def scale(coefficient: int, term: Node, p: int) -> Node:
    coefficient %= p
    if coefficient == 0 or isinstance(term, Zero):
        return ZERO
    if isinstance(term, Scale):
        return scale(coefficient * term.coefficient, term.term, p)
    if coefficient == 1:
        return term
    return Scale(coefficient, term)


def add(*terms: Node) -> Node:
    """Flattened sum without zero terms."""
    flat = []
    for term in terms:
        if isinstance(term, Sum):
            flat.extend(term.terms)
        elif not isinstance(term, Zero):
            flat.append(term)
    if not flat:
        return ZERO
    if len(flat) == 1:
        return flat[0]
    return Sum(tuple(flat))


def walk(node: Node) -> Iterator[Node]:
    stack = [node]
    while stack:
        current = stack.pop()
        yield current
        if isinstance(current, Bracket):
            stack.extend((current.right, current.left))
        elif isinstance(current, Scale):
            stack.append(current.term)
        elif isinstance(current, Sum):
            stack.extend(reversed(current.terms))


def variables(node: Node) -> Set[int]:
    return {n.index for n in walk(node) if isinstance(n, Variable)}


def constants(node: Node) -> Set[int]:
    return {n.index for n in walk(node) if isinstance(n, Constant)}


def constants_to_variables(node: Node) -> Node:
    """Replace every constant a_j by the variable x_j."""
    if isinstance(node, Constant):
        return Variable(node.index)
    elif isinstance(node, Bracket):
        return Bracket(constants_to_variables(node.left), constants_to_variables(node.right))
    elif isinstance(node, Scale):
        return Scale(node.coefficient, constants_to_variables(node.term))
    elif isinstance(node, Sum):
        return Sum(tuple(constants_to_variables(term) for term in node.terms))
    return node


def format_expression(node: Node) -> str:
    if isinstance(node, Zero):
        return "0"
    elif isinstance(node, Constant):
        return f"a{node.index}"
    elif isinstance(node, Variable):
        return f"x{node.index}"
    elif isinstance(node, Bracket):
        return f"[{format_expression(node.left)},{format_expression(node.right)}]"
    elif isinstance(node, Scale):
        inner = format_expression(node.term)
        if isinstance(node.term, Sum):
            inner = f"({inner})"
        return f"{node.coefficient}*{inner}"
    elif isinstance(node, Sum):
        return " + ".join(format_expression(term) for term in node.terms)
    raise TypeError(f"Expected a Lie expression node, received: {type(node).__name__}")


def left_normed_expression(head: Node, tail: Sequence[int]) -> Node:
    """``[...[[head, a_k1], a_k2], ...]`` for constant indices k in tail."""
    node = head
    for k in tail:
        node = Bracket(node, Constant(k))
    return node


def monomial_indices(monom) -> Tuple[int, ...]:
    """Exponent vector as the ascending constant indices of a left-normed tail."""
    return tuple(k for k, e in enumerate(monom, start=1) for _ in range(e))


def element_expression(u: LieElement) -> Node:
    """Expression tree whose normal form is u."""
    context = u.context
    p = context.p
    terms = [scale(c, Constant(i), p) for i, c in enumerate(u.linear, start=1) if c]
    for index, poly in u.fitting.entries:
        i, j = context.pairs[index]
        head = Bracket(Constant(i), Constant(j))
        for monom, coeff in poly.terms():
            terms.append(
                scale(
                    coefficient_value(coeff, p),
                    left_normed_expression(head, monomial_indices(monom)),
                    p,
                )
            )
    return add(*terms)


@dataclass(frozen=True)
class LiePolynomial:
    """
    A Lie polynomial f(x1..x_arity, a1..ar).

    Parameters
    ----------
    expression: Node
    arity: int
        Number of variables; at least the largest variable index used.
    """

    expression: Node
    arity: int

    def __post_init__(self):
        used = max(variables(self.expression), default=0)
        if used > self.arity:
            raise ConfigurationError(
                f"expression uses x{used} but the arity is {self.arity}"
            )

    def format(self) -> str:
        return format_expression(self.expression)

    def __str__(self) -> str:
        return self.format()


# Lexer


_TOKEN = re.compile(r"\s*(?:(\d+)|([A-Za-z_]\w*)|(\S))")
_SYMBOLS = "[](),+-*="
_NAME = re.compile(r"([ax])([1-9]\d*)")

INTEGER = "integer"
NAME = "name"
SYMBOL = "symbol"
END = "end"


class Lexer:
    """Scanner returning one token at a time: ``token``, ``kind`` and ``start``."""

    def __init__(self, src: str) -> None:
        self.src = src
        self.token = ""
        self.kind = END
        self.start = 0
        self.pos = 0
        self.next()

    def next(self) -> None:
        match = _TOKEN.match(self.src, self.pos)
        if match is None:
            self.token = ""
            self.kind = END
            self.start = self.pos = len(self.src)
            return
        integer, name, symbol = match.groups()
        self.start = match.start(match.lastindex)
        self.pos = match.end()
        if integer is not None:
            self.token, self.kind = integer, INTEGER
        elif name is not None:
            self.token, self.kind = name, NAME
        else:
            if symbol not in _SYMBOLS:
                raise ParseError(f"unexpected character {symbol!r}", self.start)
            self.token, self.kind = symbol, SYMBOL


class _Parser:
    def __init__(self, text: str, p: int, r: int, arity: Optional[int]):
        self.lexer = Lexer(text)
        self.p = p
        self.r = r
        self.arity = arity

    def expect(self, token: str) -> None:
        lexer = self.lexer
        if lexer.token != token or lexer.kind != SYMBOL:
            found = repr(lexer.token) if lexer.kind != END else "end of input"
            raise ParseError(f"expected {token!r}, found {found}", lexer.start)
        lexer.next()

    def at(self, token: str) -> bool:
        return self.lexer.kind == SYMBOL and self.lexer.token == token

    def expression(self) -> Node:
        terms = [self.term()]
        while self.at("+") or self.at("-"):
            negate = self.at("-")
            self.lexer.next()
            term = self.term()
            terms.append(scale(self.p - 1, term, self.p) if negate else term)
        return add(*terms)

    def term(self) -> Node:
        lexer = self.lexer
        if self.at("-"):
            lexer.next()
            return scale(self.p - 1, self.term(), self.p)
        if lexer.kind == INTEGER:
            value = int(lexer.token)
            start = lexer.start
            lexer.next()
            if self.at("*"):
                lexer.next()
                return scale(value, self.term(), self.p)
            if value % self.p:
                raise ParseError(f"scalar {value} without an operand", start)
            return ZERO
        return self.factor()

    def factor(self) -> Node:
        lexer = self.lexer
        if lexer.kind == NAME:
            return self.name()
        if self.at("["):
            lexer.next()
            left = self.expression()
            self.expect(",")
            right = self.expression()
            self.expect("]")
            return Bracket(left, right)
        if self.at("("):
            lexer.next()
            inner = self.expression()
            self.expect(")")
            return inner
        found = repr(lexer.token) if lexer.kind != END else "end of input"
        raise ParseError(f"expected a constant, variable or bracket, found {found}", lexer.start)

    def name(self) -> Node:
        lexer = self.lexer
        match = _NAME.fullmatch(lexer.token)
        if match is None:
            raise ParseError(f"unknown symbol {lexer.token!r}", lexer.start)
        prefix, digits = match.groups()
        index = int(digits)
        if prefix == "a" and index > self.r:
            raise ParseError(f"constant a{index} outside rank {self.r}", lexer.start)
        if prefix == "x" and self.arity is not None and index > self.arity:
            raise ParseError(f"variable x{index} outside arity {self.arity}", lexer.start)
        lexer.next()
        return Constant(index) if prefix == "a" else Variable(index)

    def equation(self) -> Node:
        lhs = self.expression()
        if self.at("="):
            self.lexer.next()
            rhs = self.expression()
            lhs = add(lhs, scale(self.p - 1, rhs, self.p))
        if self.lexer.kind != END:
            raise ParseError(f"unexpected {self.lexer.token!r}", self.lexer.start)
        return lhs


def parse_expression(text: str, p: int, r: int, arity: Optional[int] = None) -> Node:
    """Parse an expression or an equation ``lhs = rhs`` into the tree of lhs - rhs."""
    return _Parser(text, p, r, arity).equation()


def parse_lie_polynomial(text: str, context, arity: Optional[int] = None) -> LiePolynomial:
    """
    Parameters
    ----------
    text: str
    context: AlgebraContext
    arity: int, optional
        Number of variables. Defaults to the largest variable index used.
    """
    expression = parse_expression(text, context.p, context.r, arity)
    if arity is None:
        arity = max(variables(expression), default=0)
    return LiePolynomial(expression, arity)


def _evaluate(node: Node, point: Sequence, algebra):
    if isinstance(node, Zero):
        return algebra.zero()
    elif isinstance(node, Constant):
        return algebra.constant(node.index)
    elif isinstance(node, Variable):
        return point[node.index - 1]
    elif isinstance(node, Bracket):
        return algebra.bracket(
            _evaluate(node.left, point, algebra), _evaluate(node.right, point, algebra)
        )
    elif isinstance(node, Scale):
        return _evaluate(node.term, point, algebra) * node.coefficient
    elif isinstance(node, Sum):
        total = algebra.zero()
        for term in node.terms:
            total = total + _evaluate(term, point, algebra)
        return total
    raise TypeError(f"Expected a Lie expression node, received: {type(node).__name__}")


def evaluate(f: Union[LiePolynomial, Node], point: Sequence, algebra=None):
    """
    Substitute a point for the variables and compute the normal form.

    Parameters
    ----------
    f: LiePolynomial or Node
    point: sequence of LieElement or ExtElement
        One element per variable.
    algebra: AlgebraContext or ExtensionAlgebra, optional
        Where to evaluate; defaults to the algebra of the point.

    Returns
    -------
    LieElement or ExtElement
        Zero iff the point is a root of f.
    """
    if isinstance(f, LiePolynomial):
        expression, arity = f.expression, f.arity
    else:
        expression, arity = f, max(variables(f), default=0)
    point = list(point)
    if len(point) != arity:
        raise ConfigurationError(
            f"polynomial of arity {arity} evaluated at {len(point)} elements"
        )
    if algebra is None:
        if not point:
            raise ValueError("algebra is required to evaluate at an empty point")
        algebra = point[0].algebra
    for u in point:
        algebra.check(u)
    used = max(constants(expression), default=0)
    if used > algebra.rank:
        raise ConfigurationError(f"constant a{used} outside rank {algebra.rank}")
    return _evaluate(expression, point, algebra)


def normal_form(raw: Union[str, Node], context) -> LieElement:
    """Normal form of a bracket expression over the constants a_i."""
    if isinstance(raw, str):
        raw = parse_expression(raw, context.p, context.r, arity=0)
    if variables(raw):
        raise ConfigurationError("normal_form expects an expression without variables")
    return _evaluate(raw, (), context)

