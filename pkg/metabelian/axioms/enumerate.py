"""
Deterministic enumeration of axiom instances up to a size bound.

The bound is the polynomial degree for phi5 and phi5p, the word length for
phi6 and the coefficient degree for phi7 and phi7p, whose right-hand sides
have Fitting coefficients of degree at most ``bound - 1``.
"""

import itertools
import logging
from typing import Iterator

from metabelian.axioms.delta import (
    ConsistentWitness,
    delta_consistency_semidecide,
    residue_certificate,
)
from metabelian.axioms.instance import (
    CERTIFIED,
    PHI5,
    PHI5_PRIME,
    PHI6,
    PHI7,
    PHI7_PRIME,
    SCHEMES,
    UNKNOWN,
    AxiomInstance,
)
from metabelian.constants import DEFAULT_DEGREE_BOUND, DEGREE_CAP, ENUMERATION_CAP
from metabelian.equations.system import ModuleSystem
from metabelian.lie.context import AlgebraContext, algebra_context
from metabelian.lie.expression import Constant, left_normed_expression, normal_form
from metabelian.lie.extension import ExtensionAlgebra
from metabelian.modcore.linsolve import NoSolution
from metabelian.modcore.polynomial import PolynomialRing, substitute
from metabelian.modcore.presentation import enumerate_module_elements

log = logging.getLogger(__name__)


def _polynomials(context: AlgebraContext, bound: int, cap: int) -> Iterator[AxiomInstance]:
    r = context.r
    for f in context.ring.polynomials(bound, cap):
        if f:
            yield AxiomInstance(PHI5_PRIME, r, polynomial=f)


def _polynomials_of_arity(
    context: AlgebraContext, bound: int, cap: int
) -> Iterator[AxiomInstance]:
    r = context.r
    target = context.ring
    for n in range(1, r + 1):
        source = PolynomialRing(context.p, n)
        images = list(target.gens[:n])
        for f in source.polynomials(bound, cap):
            if f:
                yield AxiomInstance(
                    PHI5, r, arity=n, polynomial=substitute(f, images, target)
                )


def _words(context: AlgebraContext, bound: int) -> Iterator[AxiomInstance]:
    r = context.r
    for n in range(1, r + 1):
        source = algebra_context(context.p, n)
        seen = set()
        for length in range(1, bound + 1):
            for indices in itertools.product(range(1, n + 1), repeat=length):
                word = left_normed_expression(Constant(indices[0]), indices[1:])
                value = normal_form(word, source)
                if value.is_zero or value in seen:
                    continue
                seen.add(value)
                yield AxiomInstance(PHI6, r, arity=n, word=word)


def _systems(context: AlgebraContext, bound: int, cap: int):
    """One-equation systems y·f = c over Fit(context)."""
    fitting = context.fitting
    rhs = list(enumerate_module_elements(fitting, max(bound - 1, 0), cap))
    for f in context.ring.polynomials(bound, cap):
        for c in rhs:
            yield ModuleSystem.build(fitting, 1, [[f]], [c])


def _inconsistent_systems(
    context: AlgebraContext, bound: int, degree_bound: int, cap: int
) -> Iterator[AxiomInstance]:
    r = context.r
    for n in range(2, r + 1):
        source = algebra_context(context.p, n)
        base = ExtensionAlgebra.free(source, 0)
        for S in _systems(source, bound, cap):
            if not isinstance(S.solve(), NoSolution):
                continue
            if residue_certificate(S):
                status = CERTIFIED
            else:
                search = delta_consistency_semidecide(S, base, degree_bound)
                if isinstance(search, ConsistentWitness):
                    continue
                status = UNKNOWN
            yield AxiomInstance(PHI7, r, arity=n, system=S, status=status)


def _unsolvable_systems(
    context: AlgebraContext, bound: int, cap: int
) -> Iterator[AxiomInstance]:
    for S in _systems(context, bound, cap):
        if isinstance(S.solve(), NoSolution):
            yield AxiomInstance(PHI7_PRIME, context.r, system=S)


def enumerate_axioms(
    scheme: str,
    bound: int,
    context: AlgebraContext,
    degree_bound: int = DEFAULT_DEGREE_BOUND,
    cap: int = ENUMERATION_CAP,
) -> Iterator[AxiomInstance]:
    """
    Stream the instances of a scheme for F_r up to a size bound.

    Parameters
    ----------
    scheme: str
        One of SCHEMES.
    bound: int
        Size bound, see the module documentation.
    context: AlgebraContext
        F_r; fixes p and the language rank r.
    degree_bound: int, default DEFAULT_DEGREE_BOUND
        Search bound of the consistency witness search for phi7.
    cap: int
        Maximum number of enumerated candidates per family.

    Yields
    ------
    AxiomInstance
        phi7 instances carry the status "inconsistent" when the system is
        certified inconsistent over the localized Fitting module and
        "unknown" when no consistency witness was found. Systems with a
        witness are not axioms and are skipped.
    """
    if scheme not in SCHEMES:
        raise ValueError(f"scheme must be one of {SCHEMES}, received: {scheme}")
    if not isinstance(context, AlgebraContext):
        raise TypeError(f"Expected AlgebraContext, received: {type(context).__name__}")
    if not 0 <= bound <= DEGREE_CAP:
        raise ValueError(f"bound must be in [0, {DEGREE_CAP}], received: {bound}")

    if scheme == PHI5:
        yield from _polynomials_of_arity(context, bound, cap)
    elif scheme == PHI5_PRIME:
        yield from _polynomials(context, bound, cap)
    elif scheme == PHI6:
        yield from _words(context, bound)
    elif scheme == PHI7:
        yield from _inconsistent_systems(context, bound, degree_bound, cap)
    elif scheme == PHI7_PRIME:
        yield from _unsolvable_systems(context, bound, cap)
    else:
        yield AxiomInstance(scheme, context.r)
