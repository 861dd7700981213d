"""
The free metabelian Lie algebra F_r as an ambient context.

F_r splits as k^r (the span of the free generators a1..ar) plus its Fitting
radical, which coincides with the commutant. The Fitting radical is the
R-module generated by e_ij = [a_i, a_j], i > j, with the action
u·x_k = [u, a_k] and the Jacobi relations

    x_k·e_ij - x_j·e_ik + x_i·e_jk = 0    for i > j > k.

Rank 1 is accepted as well: F_1 is one-dimensional abelian with zero Fitting
radical, and only appears as the base of a module extension.
"""

import functools
from typing import Dict, List, Tuple

from metabelian.exceptions import ConfigurationError
from metabelian.lie.element import LieElement, bracket
from metabelian.modcore.polynomial import PolynomialRing
from metabelian.modcore.presentation import ModulePresentation
from metabelian.modcore.vector import FreeModuleVector


def fitting_pairs(r: int) -> Tuple[Tuple[int, int], ...]:
    """Index pairs (i, j), i > j, in generator order (2,1), (3,1), (3,2), ..."""
    return tuple((i, j) for i in range(2, r + 1) for j in range(1, i))


def jacobi_relations(
    ring: PolynomialRing, pair_index: Dict[Tuple[int, int], int]
) -> List[FreeModuleVector]:
    r = ring.r
    t = len(pair_index)
    rows = []
    for i in range(3, r + 1):
        for j in range(2, i):
            for k in range(1, j):
                rows.append(
                    FreeModuleVector(
                        ring,
                        t,
                        {
                            pair_index[(i, j)]: ring.variable(k),
                            pair_index[(i, k)]: -ring.variable(j),
                            pair_index[(j, k)]: ring.variable(i),
                        },
                    )
                )
    return rows


class AlgebraContext:
    """
    Shared data of F_r over GF(p): the polynomial ring R = k[x1..xr] and the
    Fitting presentation.

    Parameters
    ----------
    p: int
        Prime modulus.
    r: int
        Rank, the number of free generators.
    """

    def __init__(self, p: int, r: int):
        self.ring = PolynomialRing(p, r)
        self.r = r
        self.pairs = fitting_pairs(r)
        self._pair_index = {pair: k for k, pair in enumerate(self.pairs)}
        self.t = len(self.pairs)
        self.fitting = ModulePresentation(
            self.ring, self.t, jacobi_relations(self.ring, self._pair_index)
        )

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, AlgebraContext)
            and other.p == self.p
            and other.r == self.r
        )

    def __hash__(self) -> int:
        return hash(("AlgebraContext", self.p, self.r))

    def __repr__(self) -> str:
        return f"AlgebraContext(p={self.p}, r={self.r})"

    @property
    def p(self) -> int:
        return self.ring.p

    @property
    def field(self):
        return self.ring.field

    @property
    def rank(self) -> int:
        """Number of constants a_i."""
        return self.r

    @property
    def is_u_algebra(self) -> bool:
        # Fit(F_r) is torsion-free.
        return True

    def pair_index(self, i: int, j: int) -> Tuple[int, int]:
        """Component of [a_i, a_j] and its sign; i != j."""
        if i > j:
            return self._pair_index[(i, j)], 1
        elif i < j:
            return self._pair_index[(j, i)], -1
        raise ValueError(f"[a{i}, a{j}] is zero")

    def check(self, u) -> None:
        if getattr(u, "context", None) != self:
            raise ConfigurationError(
                f"element does not belong to {self!r}: {type(u).__name__}"
            )

    def zero(self):
        return LieElement(self)

    def constant(self, i: int):
        """The free generator a_i, 1-based."""
        if not 1 <= i <= self.r:
            raise ValueError(f"constant a{i} outside rank {self.r}")
        linear = [0] * self.r
        linear[i - 1] = 1
        return LieElement(self, linear)

    def generator(self, i: int):
        return self.constant(i)

    def fitting_generator(self, i: int, j: int):
        """e_ij = [a_i, a_j] as an element."""
        index, sign = self.pair_index(i, j)
        vector = FreeModuleVector.unit(
            self.ring, self.t, index, self.ring.constant(sign)
        )
        return LieElement(self, None, vector)

    def fitting_element(self, vector: FreeModuleVector):
        return LieElement(self, None, vector)

    def bracket(self, u, v):
        return bracket(u, v)

    def fitting_probes(self) -> list:
        """Finite probe set for the literal ∀y Fitting formula."""
        probes = [self.constant(i) for i in range(1, self.r + 1)]
        probes += [
            self.constant(i) + self.constant(j)
            for i in range(1, self.r + 1)
            for j in range(i + 1, self.r + 1)
        ]
        probes += [self.fitting_generator(i, j) for i, j in self.pairs]
        return probes


@functools.lru_cache(maxsize=None)
def algebra_context(p: int, r: int) -> AlgebraContext:
    """Shared AlgebraContext per (p, r), so its Gröbner basis is computed once."""
    return AlgebraContext(p, r)
