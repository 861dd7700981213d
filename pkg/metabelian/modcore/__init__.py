from metabelian.modcore.field import (
    FieldSpec,
    affine_points,
    rank_mod_p,
    row_echelon,
    solve_mod_p,
)
from metabelian.modcore.groebner import (
    ExtendedBasis,
    groebner,
    lift,
    normal_form,
    reduce,
    syzygies,
)
from metabelian.modcore.linsolve import (
    ModuleSolution,
    NoSolution,
    homogeneous_module,
    is_solution_of,
    solve_linear_over_module,
    substitute_solution,
    verify_solution,
)
from metabelian.modcore.polynomial import (
    PolynomialRing,
    format_polynomial,
    parse_polynomial,
    poly_arith,
    substitute,
)
from metabelian.modcore.presentation import (
    Embedding,
    Minor,
    ModulePresentation,
    determinant,
    embed_into_free,
    enumerate_module_elements,
    is_torsion_free,
    maximal_minors,
    quotient,
    rank,
    saturation,
    torsion_submodule,
    torsion_witness,
)
from metabelian.modcore.vector import DEGREVLEX_POT, FreeModuleVector, MonomialOrder

__all__ = (
    "DEGREVLEX_POT",
    "Embedding",
    "ExtendedBasis",
    "FieldSpec",
    "FreeModuleVector",
    "Minor",
    "ModulePresentation",
    "ModuleSolution",
    "MonomialOrder",
    "NoSolution",
    "PolynomialRing",
    "affine_points",
    "determinant",
    "embed_into_free",
    "enumerate_module_elements",
    "format_polynomial",
    "groebner",
    "homogeneous_module",
    "is_solution_of",
    "is_torsion_free",
    "lift",
    "maximal_minors",
    "normal_form",
    "parse_polynomial",
    "poly_arith",
    "quotient",
    "rank",
    "rank_mod_p",
    "reduce",
    "row_echelon",
    "saturation",
    "solve_linear_over_module",
    "solve_mod_p",
    "substitute",
    "substitute_solution",
    "syzygies",
    "torsion_submodule",
    "torsion_witness",
    "verify_solution",
)
