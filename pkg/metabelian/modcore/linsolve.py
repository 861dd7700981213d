"""
Linear systems over a finitely presented module.

Unknowns y_1..y_l range over R^t / J and equation i reads
``Σ_j y_j·f_ij = c_i``. Stacking the m equations gives a single membership
problem in R^{m·t}: the right-hand side must lie in the submodule generated
by the column maps ``(f_1j·e_s, ..., f_mj·e_s)`` and one copy of J per
equation. The lift gives a particular solution, the syzygies of the
generators give the homogeneous solutions.
"""

from typing import NamedTuple, Optional, Sequence, Tuple, Union

from metabelian.constants import Polynomial
from metabelian.exceptions import ConfigurationError
from metabelian.modcore.groebner import ExtendedBasis
from metabelian.modcore.presentation import ModulePresentation
from metabelian.modcore.vector import FreeModuleVector, concatenate


class NoSolution(NamedTuple):
    reason: str = "right-hand side is not in the image"


class ModuleSolution(NamedTuple):
    """
    particular: one vector of width t per unknown.
    homogeneous: generators of the solutions of the homogeneous system
        modulo J, each a tuple with one vector per unknown.
    """

    particular: Tuple[FreeModuleVector, ...]
    homogeneous: Tuple[Tuple[FreeModuleVector, ...], ...]


def _check_system(coeffs, rhs, J, n_unknown):
    if len(rhs) != len(coeffs):
        raise ConfigurationError(
            f"{len(coeffs)} coefficient rows but {len(rhs)} right-hand sides"
        )
    if n_unknown is None:
        if not coeffs:
            raise ConfigurationError("n_unknown is required for an empty system")
        n_unknown = len(coeffs[0])
    for row in coeffs:
        if len(row) != n_unknown:
            raise ConfigurationError(
                f"expected {n_unknown} coefficients per equation, received: {len(row)}"
            )
        for f in row:
            J.ring.coerce(f)
    for c in rhs:
        if c.width != J.n:
            raise ConfigurationError(
                f"right-hand side of width {c.width}, module has {J.n} generators"
            )
    return n_unknown


def solve_linear_over_module(
    coeffs: Sequence[Sequence[Polynomial]],
    rhs: Sequence[FreeModuleVector],
    J: ModulePresentation,
    n_unknown: Optional[int] = None,
) -> Union[NoSolution, ModuleSolution]:
    """
    Solve ``Σ_j y_j·f_ij = c_i`` for y_j in R^t / J.

    Parameters
    ----------
    coeffs: m x l nested sequence of Polynomial
    rhs: sequence of m FreeModuleVector of width t
    J: ModulePresentation
        The module R^t / J the unknowns and right-hand sides live in.
    n_unknown: int, optional
        Number of unknowns l; required when m = 0.

    Returns
    -------
    NoSolution or ModuleSolution
    """
    l = _check_system(coeffs, rhs, J, n_unknown)
    ring = J.ring
    m = len(coeffs)
    t = J.n
    width = m * t

    generators = []
    for j in range(l):
        for s in range(t):
            entries = {i * t + s: coeffs[i][j] for i in range(m) if coeffs[i][j]}
            generators.append(FreeModuleVector(ring, width, entries))
    for i in range(m):
        for relation in J.groebner_basis:
            generators.append(relation.shift(i * t, width))

    target = concatenate(rhs) if m else FreeModuleVector.zero(ring, 0)
    extended = ExtendedBasis(generators, width=width, ring=ring)
    weights = extended.lift(target)
    if weights is None:
        return NoSolution()

    def split(vector_entries) -> Tuple[FreeModuleVector, ...]:
        return tuple(
            J.reduce(
                FreeModuleVector(
                    ring, t, {s: vector_entries[j * t + s] for s in range(t)}
                )
            )
            for j in range(l)
        )

    particular = split(weights)
    homogeneous = []
    for z in extended.syzygies():
        parts = split(z.to_list())
        if any(parts):
            homogeneous.append(parts)
    return ModuleSolution(particular, tuple(homogeneous))


def substitute_solution(
    coeffs: Sequence[Sequence[Polynomial]],
    y: Sequence[FreeModuleVector],
    J: ModulePresentation,
) -> Tuple[FreeModuleVector, ...]:
    """Left-hand sides ``Σ_j y_j·f_ij`` in normal form modulo J."""
    result = []
    for row in coeffs:
        total = J.zero()
        for f, y_j in zip(row, y):
            total = total + y_j.scale(f)
        result.append(J.reduce(total))
    return tuple(result)


def verify_solution(
    coeffs: Sequence[Sequence[Polynomial]],
    rhs: Sequence[FreeModuleVector],
    y: Sequence[FreeModuleVector],
    J: ModulePresentation,
) -> bool:
    lhs = substitute_solution(coeffs, y, J)
    return all(a == J.reduce(c) for a, c in zip(lhs, rhs))


def homogeneous_module(
    solution: ModuleSolution, J: ModulePresentation, n_unknown: int
) -> ModulePresentation:
    """
    The homogeneous solutions plus J in every block, as relations of
    R^{l·t}; membership in it decides whether two solutions differ by a
    homogeneous one.
    """
    t = J.n
    width = n_unknown * t
    rows = [concatenate(parts) for parts in solution.homogeneous]
    for j in range(n_unknown):
        rows += [relation.shift(j * t, width) for relation in J.groebner_basis]
    return ModulePresentation(J.ring, width, rows)


def is_solution_of(
    y: Sequence[FreeModuleVector],
    solution: ModuleSolution,
    space: ModulePresentation,
) -> bool:
    """Whether y = particular + homogeneous, with ``space`` from homogeneous_module."""
    if not y:
        return True
    difference = concatenate(y) - concatenate(solution.particular)
    return space.contains(difference)
