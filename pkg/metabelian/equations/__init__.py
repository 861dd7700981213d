from metabelian.equations.branches import abelianized_branches, specialize
from metabelian.equations.decompose import Decomposition, VariableTerm, decompose
from metabelian.equations.oracle import brute_force_solve, candidate_elements
from metabelian.equations.solver import (
    CONSISTENT,
    INCONSISTENT,
    BranchSolution,
    SolutionSet,
    finite_equivalent_subsystem,
    solve_system,
)
from metabelian.equations.system import (
    EquationSystem,
    LinearBranch,
    ModuleSystem,
    parse,
)

__all__ = (
    "CONSISTENT",
    "INCONSISTENT",
    "BranchSolution",
    "Decomposition",
    "EquationSystem",
    "LinearBranch",
    "ModuleSystem",
    "SolutionSet",
    "VariableTerm",
    "abelianized_branches",
    "brute_force_solve",
    "candidate_elements",
    "decompose",
    "finite_equivalent_subsystem",
    "parse",
    "solve_system",
    "specialize",
)
