from metabelian.geometry.canonical import (
    canonical_system,
    forcing_equation,
    radical_member,
)
from metabelian.geometry.coordinate import (
    FITTING_RADICAL,
    POINT,
    CoordinateAlgebra,
    chain_dimension_check,
    coordinate_algebra,
    coordinate_algebra_of_module_system,
    dimension,
    is_point,
    one_variable_kind,
)
from metabelian.geometry.homs import HomPoint, homs_to_fitting, is_homomorphism

__all__ = (
    "FITTING_RADICAL",
    "POINT",
    "CoordinateAlgebra",
    "HomPoint",
    "canonical_system",
    "chain_dimension_check",
    "coordinate_algebra",
    "coordinate_algebra_of_module_system",
    "dimension",
    "forcing_equation",
    "homs_to_fitting",
    "is_homomorphism",
    "is_point",
    "one_variable_kind",
    "radical_member",
)
