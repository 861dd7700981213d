"""
Systems of equations over F_r and the module systems they reduce to.
"""

from typing import NamedTuple, Optional, Sequence, Tuple

from metabelian.constants import Polynomial
from metabelian.exceptions import ConfigurationError, ParseError
from metabelian.lie.context import AlgebraContext
from metabelian.lie.element import LieElement
from metabelian.lie.expression import (
    LiePolynomial,
    parse_expression,
    variables,
)
from metabelian.modcore.linsolve import solve_linear_over_module
from metabelian.modcore.polynomial import format_polynomial
from metabelian.modcore.presentation import ModulePresentation
from metabelian.modcore.vector import FreeModuleVector


class EquationSystem:
    """
    Finitely many equations f = 0 over F_r in the variables x1..x_arity.

    Parameters
    ----------
    context: AlgebraContext
    arity: int
    polynomials: sequence of LiePolynomial
    """

    def __init__(
        self,
        context: AlgebraContext,
        arity: int,
        polynomials: Sequence[LiePolynomial] = (),
    ):
        if arity < 0:
            raise ConfigurationError(f"arity must be >= 0, received: {arity}")
        polynomials = tuple(polynomials)
        for f in polynomials:
            if not isinstance(f, LiePolynomial):
                raise TypeError(f"Expected LiePolynomial, received: {type(f).__name__}")
            if f.arity != arity:
                raise ConfigurationError(
                    f"equation of arity {f.arity} in a system of arity {arity}"
                )
        self.context = context
        self.arity = arity
        self.polynomials = polynomials

    def __len__(self) -> int:
        return len(self.polynomials)

    def __iter__(self):
        return iter(self.polynomials)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EquationSystem):
            return NotImplemented
        return (
            self.context == other.context
            and self.arity == other.arity
            and self.polynomials == other.polynomials
        )

    def __repr__(self) -> str:
        return (
            f"EquationSystem(p={self.context.p}, r={self.context.r}, "
            f"arity={self.arity}, n_equation={len(self)})"
        )

    def format(self) -> str:
        """System file text: one equation per line."""
        return "".join(f"{f.format()}\n" for f in self.polynomials)


def parse(text: str, context: AlgebraContext, arity: Optional[int] = None) -> EquationSystem:
    """
    Parse a system: one equation per line, blank lines and ``#`` comments
    ignored. The arity defaults to the largest variable index used.
    """
    expressions = []
    for number, line in enumerate(text.splitlines(), start=1):
        content = line.split("#", 1)[0]
        if not content.strip():
            continue
        try:
            expressions.append(parse_expression(content, context.p, context.r, arity))
        except ParseError as e:
            error = ParseError(f"line {number}: {e}")
            error.position = e.position
            raise error from e
    if arity is None:
        arity = max((max(variables(e), default=0) for e in expressions), default=0)
    return EquationSystem(
        context, arity, [LiePolynomial(e, arity) for e in expressions]
    )


class LinearBranch(NamedTuple):
    """
    The assignment z_i = Σ_j α_ij·a_j of the linear parts.

    alpha: one row of r coefficients in [0, p) per variable.
    """

    alpha: Tuple[Tuple[int, ...], ...]

    def assignment(self, context: AlgebraContext) -> Tuple[LieElement, ...]:
        return tuple(LieElement(context, row) for row in self.alpha)

    def format(self) -> str:
        terms = []
        for i, row in enumerate(self.alpha, start=1):
            linear = " + ".join(
                f"a{j}" if c == 1 else f"{c}*a{j}"
                for j, c in enumerate(row, start=1)
                if c
            )
            terms.append(f"x{i} = {linear or 0}")
        return ", ".join(terms)


class ModuleSystem(NamedTuple):
    """
    Equations ``Σ_j y_j·f_ij = c_i`` with unknowns y_j in ``module``.

    module: the module R^t / J the unknowns and right-hand sides live in.
    n_unknown: number of unknowns l.
    coefficients: m rows of l polynomials.
    rhs: m vectors of width t in normal form.
    """

    module: ModulePresentation
    n_unknown: int
    coefficients: Tuple[Tuple[Polynomial, ...], ...]
    rhs: Tuple[FreeModuleVector, ...]

    @classmethod
    def build(
        cls,
        module: ModulePresentation,
        n_unknown: int,
        coefficients: Sequence[Sequence[Polynomial]],
        rhs: Sequence[FreeModuleVector],
    ) -> "ModuleSystem":
        if len(coefficients) != len(rhs):
            raise ConfigurationError(
                f"{len(coefficients)} coefficient rows but {len(rhs)} right-hand sides"
            )
        for row in coefficients:
            if len(row) != n_unknown:
                raise ConfigurationError(
                    f"expected {n_unknown} coefficients per equation, received: {len(row)}"
                )
        return cls(
            module,
            n_unknown,
            tuple(tuple(row) for row in coefficients),
            tuple(module.reduce(c) for c in rhs),
        )

    @property
    def n_equation(self) -> int:
        return len(self.coefficients)

    def solve(self):
        return solve_linear_over_module(
            self.coefficients, self.rhs, self.module, n_unknown=self.n_unknown
        )

    def equations(self) -> Tuple[str, ...]:
        lines = []
        for row, c in zip(self.coefficients, self.rhs):
            lhs = " + ".join(
                f"y{j}*({format_polynomial(f)})"
                for j, f in enumerate(row, start=1)
                if f
            )
            lines.append(f"{lhs or 0} = [{c.format()}]")
        return tuple(lines)
