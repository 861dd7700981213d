"""
Consistency of module systems over the Fitting module localized at
Δ = ⟨x1..xn⟩.

A system S is consistent over the localization iff for some f outside Δ and
some tuple α of unitary divisors of f the transformed system S_{f,α} is
consistent over the Fitting module itself. Searching f and α by degree is a
semi-decision: it finds consistency, never inconsistency. Inconsistency is
certified separately by reducing modulo Δ, where the system becomes linear
over k.
"""

import itertools
import logging
from typing import List, NamedTuple, Sequence, Tuple, Union

import numpy as np
from sympy.polys.polyerrors import ExactQuotientFailed

from metabelian.constants import DEGREE_CAP, IntDType, Polynomial
from metabelian.equations.system import ModuleSystem
from metabelian.exceptions import ConfigurationError, NonDivisor
from metabelian.lie.extension import ExtensionAlgebra
from metabelian.modcore.field import solve_mod_p
from metabelian.modcore.linsolve import ModuleSolution, NoSolution
from metabelian.modcore.polynomial import (
    PolynomialRing,
    constant_term,
    divides,
    format_polynomial,
    total_degree,
)

log = logging.getLogger(__name__)


class ConsistentWitness(NamedTuple):
    f: Polynomial
    alpha: Tuple[Polynomial, ...]
    solution: ModuleSolution


class UnknownUpTo(NamedTuple):
    bound: int


def unit_normalized(d: Polynomial, ring: PolynomialRing) -> Polynomial:
    """d scaled to constant term 1."""
    c0 = constant_term(d)
    if c0 == 0:
        raise ValueError(
            f"divisor {format_polynomial(d)} has a zero constant term, it lies in Δ"
        )
    return d * ring.field.inverse(c0)


def unitary_divisors(f: Polynomial, ring: PolynomialRing) -> List[Polynomial]:
    """Divisors of f with constant term 1, by trial division."""
    ring.coerce(f)
    if constant_term(f) == 0:
        raise ValueError(f"{format_polynomial(f)} lies in Δ")
    return [
        d
        for d in ring.polynomials(total_degree(f))
        if constant_term(d) == 1 and divides(d, f)
    ]


def s_f_alpha(
    S: ModuleSystem, f: Polynomial, alpha: Sequence[Polynomial]
) -> ModuleSystem:
    """
    Transform S by f and unitary divisors α of f: divide the coefficient of
    y_j by α_j and multiply the right-hand sides by d = Π α_j.

    Raises NonDivisor if a coefficient is not divisible by its α_j.
    """
    ring = S.module.ring
    ring.coerce(f)
    if constant_term(f) == 0:
        raise ValueError(f"f = {format_polynomial(f)} must lie outside Δ")
    if len(alpha) != S.n_unknown:
        raise ConfigurationError(
            f"expected {S.n_unknown} divisors, received: {len(alpha)}"
        )
    normalized = []
    for d in alpha:
        d = unit_normalized(ring.coerce(d), ring)
        if not divides(d, f):
            raise ValueError(
                f"{format_polynomial(d)} does not divide {format_polynomial(f)}"
            )
        normalized.append(d)

    product = ring.one
    for d in normalized:
        product = product * d
    coefficients = []
    for row in S.coefficients:
        new_row = []
        for coefficient, d in zip(row, normalized):
            try:
                new_row.append(coefficient.exquo(d))
            except ExactQuotientFailed as e:
                raise NonDivisor(
                    f"{format_polynomial(coefficient)} is not divisible by "
                    f"{format_polynomial(d)}"
                ) from e
        coefficients.append(new_row)
    rhs = [c.scale(product) for c in S.rhs]
    return ModuleSystem.build(S.module, S.n_unknown, coefficients, rhs)


def over_fitting(S: ModuleSystem, B: ExtensionAlgebra) -> ModuleSystem:
    """
    S with its right-hand sides placed in fitting_of(B). A system over
    Fit(F_n) is padded with zero module components.
    """
    fitting = B.fitting
    if S.module.ring != fitting.ring:
        raise ConfigurationError("system and algebra over different polynomial rings")
    if S.module.n == fitting.n:
        rhs = S.rhs
    elif S.module.n == B.base.t:
        rhs = [c.shift(0, fitting.n) for c in S.rhs]
    else:
        raise ConfigurationError(
            f"system over a module with {S.module.n} generators does not fit "
            f"{B!r}"
        )
    return ModuleSystem.build(fitting, S.n_unknown, S.coefficients, rhs)


def residue_certificate(S: ModuleSystem) -> bool:
    """
    Whether S is inconsistent modulo Δ, which certifies inconsistency over
    the localization.

    Modulo Δ the module becomes k^t / J̄ with J̄ the constant parts of the
    relations, and every coefficient becomes its constant term.
    """
    module = S.module
    p = module.ring.p
    t = module.n
    l = S.n_unknown
    m = S.n_equation
    relations = [
        [constant_term(q) for q in row.to_list()] for row in module.groebner_basis
    ]
    relations = [row for row in relations if any(row)]
    n_relation = len(relations)
    A = np.zeros((m * t, l * t + m * n_relation), dtype=IntDType)
    b = np.zeros(m * t, dtype=IntDType)
    for i, (row, c) in enumerate(zip(S.coefficients, S.rhs)):
        for s in range(t):
            for j, f in enumerate(row):
                A[i * t + s, j * t + s] = constant_term(f)
            for k, relation in enumerate(relations):
                A[i * t + s, l * t + i * n_relation + k] = relation[s]
            b[i * t + s] = constant_term(c[s])
    return solve_mod_p(A, b, p) is None


def delta_consistency_semidecide(
    S: ModuleSystem, B: ExtensionAlgebra, degree_bound: int
) -> Union[ConsistentWitness, UnknownUpTo]:
    """
    Search f of degree <= bound with constant term 1, and tuples α of its
    unitary divisors, for a transformed system solvable over fitting_of(B).

    Candidates are visited by degree of f and then in enumeration order, so
    a witness found at some bound is also the answer at every larger bound.
    """
    if not 0 <= degree_bound <= DEGREE_CAP:
        raise ValueError(
            f"degree_bound must be in [0, {DEGREE_CAP}], received: {degree_bound}"
        )
    system = over_fitting(S, B)
    ring = system.module.ring
    candidates = [
        f for f in ring.polynomials(degree_bound) if f and constant_term(f) == 1
    ]
    candidates.sort(key=total_degree)
    n_tried = 0
    for f in candidates:
        divisors = unitary_divisors(f, ring)
        for alpha in itertools.product(divisors, repeat=system.n_unknown):
            try:
                transformed = s_f_alpha(system, f, alpha)
            except NonDivisor:
                continue
            n_tried += 1
            solution = transformed.solve()
            if not isinstance(solution, NoSolution):
                log.debug("witness after %d transformed systems", n_tried)
                return ConsistentWitness(f, tuple(alpha), solution)
    log.debug("no witness among %d transformed systems", n_tried)
    return UnknownUpTo(degree_bound)
