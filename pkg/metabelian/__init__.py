from metabelian import data
from metabelian.axioms import (
    AxiomInstance,
    Member,
    NonMember,
    check_instance,
    classify_ucl,
    delta_consistency_semidecide,
    enumerate_axioms,
    s_f_alpha,
)
from metabelian.equations import (
    EquationSystem,
    ModuleSystem,
    SolutionSet,
    abelianized_branches,
    brute_force_solve,
    decompose,
    finite_equivalent_subsystem,
    parse,
    solve_system,
    specialize,
)
from metabelian.geometry import (
    CoordinateAlgebra,
    HomPoint,
    canonical_system,
    chain_dimension_check,
    coordinate_algebra,
    coordinate_algebra_of_module_system,
    dimension,
    homs_to_fitting,
    is_point,
    radical_member,
)
from metabelian.lie import (
    AlgebraContext,
    ExtElement,
    ExtensionAlgebra,
    LieElement,
    LiePolynomial,
    algebra_context,
    bracket,
    embed_extension,
    evaluate,
    ext_bracket,
    fitting_of,
    in_fitting,
    normal_form,
    phi_eval,
)
from metabelian.modcore import (
    FieldSpec,
    FreeModuleVector,
    ModulePresentation,
    PolynomialRing,
    groebner,
    is_torsion_free,
    rank,
    solve_linear_over_module,
    torsion_submodule,
)

__version__ = "0.1.0"

__all__ = (
    "data",
    "AxiomInstance",
    "Member",
    "NonMember",
    "check_instance",
    "classify_ucl",
    "delta_consistency_semidecide",
    "enumerate_axioms",
    "s_f_alpha",
    "EquationSystem",
    "ModuleSystem",
    "SolutionSet",
    "abelianized_branches",
    "brute_force_solve",
    "decompose",
    "finite_equivalent_subsystem",
    "parse",
    "solve_system",
    "specialize",
    "CoordinateAlgebra",
    "HomPoint",
    "canonical_system",
    "chain_dimension_check",
    "coordinate_algebra",
    "coordinate_algebra_of_module_system",
    "dimension",
    "homs_to_fitting",
    "is_point",
    "radical_member",
    "AlgebraContext",
    "ExtElement",
    "ExtensionAlgebra",
    "LieElement",
    "LiePolynomial",
    "algebra_context",
    "bracket",
    "embed_extension",
    "evaluate",
    "ext_bracket",
    "fitting_of",
    "in_fitting",
    "normal_form",
    "phi_eval",
    "FieldSpec",
    "FreeModuleVector",
    "ModulePresentation",
    "PolynomialRing",
    "groebner",
    "is_torsion_free",
    "rank",
    "solve_linear_over_module",
    "torsion_submodule",
)
