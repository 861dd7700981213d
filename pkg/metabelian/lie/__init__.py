from metabelian.lie.context import AlgebraContext, algebra_context
from metabelian.lie.element import (
    FITTING_MODES,
    LieElement,
    bracket,
    format_element,
    in_fitting,
    phi_eval,
)
from metabelian.lie.expression import (
    LiePolynomial,
    element_expression,
    evaluate,
    format_expression,
    normal_form,
    parse_expression,
    parse_lie_polynomial,
)
from metabelian.lie.extension import (
    ExtElement,
    ExtensionAlgebra,
    ExtensionEmbedding,
    embed_extension,
    ext_bracket,
    fitting_of,
)
from metabelian.lie.monomials import (
    basic_monomials,
    count_basic_monomials,
    fitting_dimension,
)

__all__ = (
    "FITTING_MODES",
    "AlgebraContext",
    "algebra_context",
    "ExtElement",
    "ExtensionAlgebra",
    "ExtensionEmbedding",
    "LieElement",
    "LiePolynomial",
    "basic_monomials",
    "bracket",
    "count_basic_monomials",
    "element_expression",
    "embed_extension",
    "evaluate",
    "ext_bracket",
    "fitting_dimension",
    "fitting_of",
    "format_element",
    "format_expression",
    "in_fitting",
    "normal_form",
    "parse_expression",
    "parse_lie_polynomial",
    "phi_eval",
)
