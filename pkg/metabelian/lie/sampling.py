"""
Seeded random elements, for identity probes and property tests.
"""

import numpy as np

from metabelian.constants import Polynomial
from metabelian.lie.element import LieElement
from metabelian.lie.extension import ExtensionAlgebra
from metabelian.modcore.polynomial import PolynomialRing
from metabelian.modcore.vector import FreeModuleVector


def random_polynomial(
    ring: PolynomialRing, degree: int, rng: np.random.Generator
) -> Polynomial:
    """Uniform coefficients on every monomial of degree <= degree."""
    monomials = ring.monomials(degree)
    coefficients = rng.integers(0, ring.p, size=len(monomials))
    return ring.from_terms(dict(zip(monomials, coefficients.tolist())))


def random_vector(
    ring: PolynomialRing, width: int, degree: int, rng: np.random.Generator
) -> FreeModuleVector:
    return FreeModuleVector.from_list(
        ring, [random_polynomial(ring, degree, rng) for _ in range(width)]
    )


def random_element(algebra, rng: np.random.Generator, degree: int = 1):
    """
    Random element of an AlgebraContext or an ExtensionAlgebra, with
    Fitting and module coefficients of degree <= degree.
    """
    if isinstance(algebra, ExtensionAlgebra):
        lie = random_element(algebra.base, rng, degree)
        mod = random_vector(algebra.ring, algebra.module.n, degree, rng)
        return algebra.element(lie, mod)
    linear = rng.integers(0, algebra.p, size=algebra.r).tolist()
    fitting = random_vector(algebra.ring, algebra.t, degree, rng)
    return LieElement(algebra, linear, fitting)
