"""
Canonical systems of module presentations and radical membership.

A module presentation M = ⟨m_1..m_n | rows⟩ is transcribed into a system
over F_r in the variables x_1..x_n: the action m_c·x_k becomes the bracket
[x_c, a_k], and the forcing equations [[a1, a2], x_i] = 0 pin every x_i
into the Fitting radical. The coordinate algebra of the resulting set is
F_r ⊕ M for torsion-free M; its radical is the kernel of x_i ↦ m_i.
"""

from metabelian.equations.system import EquationSystem
from metabelian.exceptions import ConfigurationError, TorsionInput
from metabelian.lie.context import AlgebraContext, algebra_context
from metabelian.lie.expression import (
    Bracket,
    Constant,
    LiePolynomial,
    Variable,
    add,
    evaluate,
    left_normed_expression,
    monomial_indices,
    scale,
)
from metabelian.lie.extension import ExtensionAlgebra
from metabelian.modcore.polynomial import coefficient_value
from metabelian.modcore.presentation import ModulePresentation, is_torsion_free


def _module_context(M: ModulePresentation) -> AlgebraContext:
    if not isinstance(M, ModulePresentation):
        raise TypeError(f"Expected ModulePresentation, received: {type(M).__name__}")
    return algebra_context(M.ring.p, M.ring.r)


def forcing_equation(i: int) -> Bracket:
    """[[a1, a2], x_i]: zero iff x_i lies in the Fitting radical."""
    return Bracket(Bracket(Constant(1), Constant(2)), Variable(i))


def canonical_system(M: ModulePresentation) -> EquationSystem:
    """
    The system whose algebraic set corresponds to hom_R(M, Fit(F_r)).

    Parameters
    ----------
    M: ModulePresentation
        Over k[x1..xr] with r >= 2.

    Returns
    -------
    EquationSystem
        One equation per relation row, then one forcing equation per
        generator.
    """
    context = _module_context(M)
    if context.r < 2:
        raise ConfigurationError(f"canonical systems need r >= 2, received: {context.r}")
    p = context.p
    expressions = []
    for row in M.relations:
        terms = []
        for c, q in row.entries:
            for monom, coeff in q.terms():
                terms.append(
                    scale(
                        coefficient_value(coeff, p),
                        left_normed_expression(Variable(c + 1), monomial_indices(monom)),
                        p,
                    )
                )
        expressions.append(add(*terms))
    expressions += [forcing_equation(i) for i in range(1, M.n + 1)]
    return EquationSystem(
        context, M.n, [LiePolynomial(expression, M.n) for expression in expressions]
    )


def radical_member(f: LiePolynomial, M: ModulePresentation) -> bool:
    """
    Whether f lies in the radical of the canonical system of M: evaluate
    f in F_r ⊕ M at x_i = m_i and test for zero.

    Raises TorsionInput if M has torsion.
    """
    context = _module_context(M)
    if not isinstance(f, LiePolynomial):
        raise TypeError(f"Expected LiePolynomial, received: {type(f).__name__}")
    if f.arity > M.n:
        raise ConfigurationError(
            f"polynomial of arity {f.arity} over a module with {M.n} generators"
        )
    if not is_torsion_free(M):
        raise TorsionInput("radical membership requires a torsion-free module")
    B = ExtensionAlgebra(context, M)
    point = [B.module_generator(c) for c in range(f.arity)]
    return evaluate(f, point, B).is_zero
