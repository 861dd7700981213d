"""
The compatibility decision procedure for systems over F_r.

A system is consistent iff one of its linear branches gives a module system
that is solvable over Fit(F_r). Solutions are kept symbolically: per branch,
a particular solution and generators of the homogeneous solutions.
"""

import itertools
import logging
from typing import Iterator, List, NamedTuple, Sequence, Tuple

import pandas as pd

from metabelian.constants import DEFAULT_BRANCH_CAP, ENUMERATION_CAP
from metabelian.equations.branches import abelianized_branches, specialize
from metabelian.equations.system import EquationSystem, LinearBranch, ModuleSystem
from metabelian.exceptions import ResourceCapExceeded
from metabelian.lie.element import LieElement, format_element
from metabelian.lie.expression import evaluate
from metabelian.modcore.linsolve import (
    ModuleSolution,
    NoSolution,
    homogeneous_module,
    is_solution_of,
)
from metabelian.modcore.presentation import (
    ModulePresentation,
    enumerate_module_elements,
)
from metabelian.modcore.vector import FreeModuleVector, concatenate

log = logging.getLogger(__name__)

CONSISTENT = "consistent"
INCONSISTENT = "inconsistent"


class BranchSolution(NamedTuple):
    branch: LinearBranch
    system: ModuleSystem
    solution: ModuleSolution

    def particular_point(self, context) -> Tuple[LieElement, ...]:
        return tuple(
            LieElement(context, row, y)
            for row, y in zip(self.branch.alpha, self.solution.particular)
        )


def format_point(point: Sequence) -> str:
    return "(" + ", ".join(format_element(u) for u in point) + ")"


class SolutionSet:
    """
    The algebraic set of a system over F_r.

    Parameters
    ----------
    system: EquationSystem
    branches: sequence of BranchSolution
        The consistent branches, in branch order.
    n_branch: int
        Number of linear branches examined.
    """

    def __init__(
        self,
        system: EquationSystem,
        branches: Sequence[BranchSolution],
        n_branch: int,
    ):
        self.system = system
        self.branches = tuple(branches)
        self.n_branch = n_branch
        self._spaces = {}

    @property
    def context(self):
        return self.system.context

    @property
    def verdict(self) -> str:
        return CONSISTENT if self.branches else INCONSISTENT

    @property
    def is_consistent(self) -> bool:
        return bool(self.branches)

    def __repr__(self) -> str:
        return (
            f"SolutionSet(verdict={self.verdict}, n_branch={self.n_branch}, "
            f"n_consistent={len(self.branches)})"
        )

    def _space(self, k: int) -> ModulePresentation:
        if k not in self._spaces:
            self._spaces[k] = homogeneous_module(
                self.branches[k].solution, self.context.fitting, self.system.arity
            )
        return self._spaces[k]

    def points(self) -> List[Tuple[LieElement, ...]]:
        """One point per consistent branch: the particular solution."""
        return [b.particular_point(self.context) for b in self.branches]

    def verify(self) -> bool:
        """Whether every particular point is a root of every equation."""
        return all(
            evaluate(f, point, self.context).is_zero
            for point in self.points()
            for f in self.system
        )

    def _branch_of(self, linear: Tuple[Tuple[int, ...], ...]) -> int:
        for k, b in enumerate(self.branches):
            if b.branch.alpha == linear:
                return k
        return -1

    def contains(self, point: Sequence[LieElement]) -> bool:
        """Exact membership of a point in the solution set."""
        point = list(point)
        if len(point) != self.system.arity:
            raise ValueError(
                f"expected a point with {self.system.arity} elements, received: {len(point)}"
            )
        for u in point:
            self.context.check(u)
        k = self._branch_of(tuple(u.linear for u in point))
        if k < 0:
            return False
        y = [u.fitting for u in point]
        return is_solution_of(y, self.branches[k].solution, self._space(k))

    def slice(
        self, degree_bound: int, cap: int = ENUMERATION_CAP
    ) -> List[Tuple[LieElement, ...]]:
        """All solutions whose Fitting parts have degree <= bound."""
        return list(self._iter_slice(degree_bound, cap))

    def _iter_slice(self, degree_bound: int, cap: int) -> Iterator[Tuple[LieElement, ...]]:
        context = self.context
        n = self.system.arity
        candidates = list(enumerate_module_elements(context.fitting, degree_bound, cap))
        count = len(candidates) ** n
        if count * len(self.branches) > cap:
            raise ResourceCapExceeded(
                f"{count} Fitting candidates per branch at degree <= {degree_bound}, "
                f"cap is {cap}"
            )
        for k, b in enumerate(self.branches):
            space = self._space(k)
            for y in itertools.product(candidates, repeat=n):
                if is_solution_of(y, b.solution, space):
                    yield tuple(
                        LieElement._new(context, row, fitting)
                        for row, fitting in zip(b.branch.alpha, y)
                    )

    def branch_table(self) -> pd.DataFrame:
        """One row per consistent branch."""
        return pd.DataFrame(
            {
                "branch": list(range(len(self.branches))),
                "assignment": [b.branch.format() for b in self.branches],
                "particular": [format_point(point) for point in self.points()],
                "n_homogeneous": [len(b.solution.homogeneous) for b in self.branches],
            },
            columns=["branch", "assignment", "particular", "n_homogeneous"],
        )


def solve_system(
    S: EquationSystem, branch_cap: int = DEFAULT_BRANCH_CAP
) -> SolutionSet:
    """
    Decide consistency of S over F_r and describe its solutions.

    Parameters
    ----------
    S: EquationSystem
    branch_cap: int
        Maximum number of linear branches; ResourceCapExceeded beyond.

    Returns
    -------
    SolutionSet
    """
    branches = abelianized_branches(S, branch_cap=branch_cap)
    solved = []
    for branch in branches:
        system = specialize(S, branch)
        solution = system.solve()
        if isinstance(solution, NoSolution):
            continue
        solved.append(BranchSolution(branch, system, solution))
    log.info(
        "%d of %d linear branches give a solvable module system",
        len(solved),
        len(branches),
    )
    return SolutionSet(S, solved, len(branches))


def _row_vector(ms: ModuleSystem, k: int) -> FreeModuleVector:
    ring = ms.module.ring
    coefficients = FreeModuleVector(ring, ms.n_unknown, dict(enumerate(ms.coefficients[k])))
    return concatenate([coefficients, ms.rhs[k]])


def finite_equivalent_subsystem(ms: ModuleSystem) -> ModuleSystem:
    """
    Drop every equation that is an R-combination of the kept ones modulo the
    relations of the module. Each dropped equation is certified by a
    membership test, so the solution sets coincide.
    """
    ring = ms.module.ring
    l = ms.n_unknown
    width = l + ms.module.n
    relations = [row.shift(l, width) for row in ms.module.groebner_basis]
    kept: List[int] = []
    for k in range(ms.n_equation):
        span = ModulePresentation(
            ring, width, relations + [_row_vector(ms, i) for i in kept]
        )
        if not span.contains(_row_vector(ms, k)):
            kept.append(k)
    return ModuleSystem(
        ms.module,
        l,
        tuple(ms.coefficients[k] for k in kept),
        tuple(ms.rhs[k] for k in kept),
    )
