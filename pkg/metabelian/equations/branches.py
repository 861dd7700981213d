"""
Reduction of a system over F_r to linear algebra over k and module systems.

Writing every variable as x_i = z_i + y_i, with z_i linear and y_i in the
Fitting radical, the projection of the system onto F_r / Fit ≅ k^r only
involves the z_i. Every solution z of that linear system is a branch; on a
branch the system becomes linear in the y_i over R.
"""

import logging
from typing import List

import numpy as np

from metabelian.constants import DEFAULT_BRANCH_CAP, IntDType
from metabelian.equations.decompose import decompose
from metabelian.equations.system import EquationSystem, LinearBranch, ModuleSystem
from metabelian.lie.expression import evaluate
from metabelian.lie.extension import ExtElement, ExtensionAlgebra
from metabelian.modcore.field import affine_points, solve_mod_p
from metabelian.modcore.vector import FreeModuleVector

log = logging.getLogger(__name__)


def abelianized_system(S: EquationSystem):
    """
    Matrix and right-hand side of the projected system in the unknowns
    α_ij, flattened row by row.
    """
    context = S.context
    n = S.arity
    r = context.r
    p = context.p
    A = np.zeros((len(S) * r, n * r), dtype=IntDType)
    b = np.zeros(len(S) * r, dtype=IntDType)
    for k, f in enumerate(S):
        d = decompose(f, context)
        for j in range(r):
            row = k * r + j
            for i, term in enumerate(d.terms):
                A[row, i * r + j] = term.beta
            b[row] = (-d.c.linear[j]) % p
    return A, b


def abelianized_branches(
    S: EquationSystem, branch_cap: int = DEFAULT_BRANCH_CAP
) -> List[LinearBranch]:
    """
    All solutions of the system projected onto F_r / Fit.

    An empty list means the projection, and hence S, is inconsistent.
    ResourceCapExceeded is raised when there are more than ``branch_cap``
    branches.
    """
    context = S.context
    n = S.arity
    r = context.r
    A, b = abelianized_system(S)
    solution = solve_mod_p(A, b, context.p)
    if solution is None:
        log.debug("abelianized system is inconsistent")
        return []
    particular, nullspace = solution
    branches = [
        LinearBranch(
            tuple(tuple(int(v) for v in point[i * r : (i + 1) * r]) for i in range(n))
        )
        for point in affine_points(particular, nullspace, context.p, cap=branch_cap)
    ]
    log.debug("%d linear branches", len(branches))
    return branches


def specialize(S: EquationSystem, branch: LinearBranch) -> ModuleSystem:
    """
    The module system ``Σ_i y_i·f_i = c`` over Fit(F_r) on a branch.

    The system is evaluated in F_r ⊕ T_n at x_i = z_i + m_i with m_i the free
    generators of T_n: the T_n part is linear in the m_i and gives the
    coefficients, the F_r part is the constant Fitting term moved to the
    right-hand side.
    """
    context = S.context
    n = S.arity
    if len(branch.alpha) != n:
        raise ValueError(f"branch assigns {len(branch.alpha)} variables, system has {n}")
    algebra = ExtensionAlgebra.free(context, n)
    point = [
        ExtElement(algebra, z, FreeModuleVector.unit(context.ring, n, i))
        for i, z in enumerate(branch.assignment(context))
    ]
    coefficients = []
    rhs = []
    for f in S:
        value = evaluate(f, point, algebra)
        if not value.is_fitting:
            raise ValueError("branch does not solve the abelianized system")
        coefficients.append(tuple(value.mod.to_list()))
        rhs.append(-value.lie.fitting)
    return ModuleSystem.build(context.fitting, n, coefficients, rhs)
