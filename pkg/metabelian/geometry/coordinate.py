"""
Coordinate algebras F_r ⊕ M of irreducible algebraic sets and their
dimension.
"""

import logging
from typing import List

from metabelian.equations.system import ModuleSystem
from metabelian.exceptions import ConfigurationError, TorsionInput
from metabelian.lie.context import algebra_context
from metabelian.lie.extension import ExtensionAlgebra
from metabelian.modcore.presentation import ModulePresentation, is_torsion_free

log = logging.getLogger(__name__)

POINT = "point"
FITTING_RADICAL = "fitting radical"


class CoordinateAlgebra:
    """
    F_r ⊕ M with M torsion-free.

    Parameters
    ----------
    algebra: ExtensionAlgebra
    """

    def __init__(self, algebra: ExtensionAlgebra):
        if not isinstance(algebra, ExtensionAlgebra):
            raise TypeError(
                f"Expected ExtensionAlgebra, received: {type(algebra).__name__}"
            )
        if not algebra.is_u_algebra:
            raise TorsionInput("coordinate algebras have a torsion-free module")
        self.algebra = algebra

    def __repr__(self) -> str:
        return f"CoordinateAlgebra(r={self.algebra.rank}, module={self.module!r})"

    def __eq__(self, other) -> bool:
        if not isinstance(other, CoordinateAlgebra):
            return NotImplemented
        return self.algebra == other.algebra

    def __hash__(self) -> int:
        return hash(self.algebra)

    @property
    def module(self) -> ModulePresentation:
        return self.algebra.module

    @property
    def dimension(self) -> int:
        return self.module.rank


def coordinate_algebra(M: ModulePresentation) -> CoordinateAlgebra:
    """F_r ⊕ M/T(M): homomorphisms into the torsion-free Fit(F_r) kill T(M)."""
    context = algebra_context(M.ring.p, M.ring.r)
    quotient = M if is_torsion_free(M) else M.torsion_free_quotient()
    return CoordinateAlgebra(ExtensionAlgebra(context, quotient))


def coordinate_algebra_of_module_system(ms: ModuleSystem) -> CoordinateAlgebra:
    """
    Coordinate algebra of the solutions of a homogeneous system
    ``Σ_j y_j·f_ij = 0`` over Fit(F_r).

    The solutions are hom_R(R^l / ⟨coefficient rows⟩, Fit(F_r)).
    """
    ring = ms.module.ring
    context = algebra_context(ring.p, ring.r)
    if not ms.module.same_submodule(context.fitting):
        raise ConfigurationError(f"system must be over Fit(F_{ring.r})")
    if any(c for c in ms.rhs):
        raise ValueError("coordinate algebras are defined for homogeneous systems")
    M = ModulePresentation.from_rows(ring, ms.n_unknown, ms.coefficients)
    return coordinate_algebra(M)


def dimension(gamma: CoordinateAlgebra) -> int:
    """Rank of the module of the coordinate algebra."""
    return gamma.dimension


def is_point(gamma: CoordinateAlgebra) -> bool:
    return gamma.dimension == 0


def one_variable_kind(gamma: CoordinateAlgebra) -> str:
    """
    An irreducible set in one variable is a point or the Fitting radical,
    for a cyclic module of rank 0 or 1.
    """
    if gamma.module.n != 1:
        raise ValueError(
            f"expected a cyclic module, received {gamma.module.n} generators"
        )
    return POINT if is_point(gamma) else FITTING_RADICAL


def chain_dimension_check(gamma: CoordinateAlgebra) -> List[CoordinateAlgebra]:
    """
    A chain of coordinate algebras with module ranks d, d - 1, ..., 0.

    Every step divides out the isolated submodule spanned by a nonzero
    generator, which removes exactly one from the rank. Empty for a point.
    """
    d = gamma.dimension
    if d == 0:
        return []
    chain = [gamma]
    current = gamma.module
    context = gamma.algebra.base
    while current.rank > 0:
        c = next(c for c in range(current.n) if not current.contains(current.generator(c)))
        following = current.with_relations([current.generator(c)]).torsion_free_quotient()
        if following.rank != current.rank - 1:
            raise RuntimeError(
                f"rank dropped from {current.rank} to {following.rank}"
            )
        log.debug("chain step: rank %d", following.rank)
        chain.append(CoordinateAlgebra(ExtensionAlgebra(context, following)))
        current = following
    return chain
