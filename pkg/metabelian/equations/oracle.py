"""
Brute-force reference solver: enumerate every candidate point with bounded
Fitting parts and keep the roots.
"""

import itertools
import logging
from typing import List, Tuple

from metabelian.constants import ENUMERATION_CAP
from metabelian.equations.system import EquationSystem
from metabelian.exceptions import ResourceCapExceeded
from metabelian.lie.context import AlgebraContext
from metabelian.lie.element import LieElement
from metabelian.lie.expression import evaluate
from metabelian.modcore.presentation import enumerate_module_elements

log = logging.getLogger(__name__)


def candidate_elements(
    context: AlgebraContext, degree_bound: int, cap: int = ENUMERATION_CAP
) -> List[LieElement]:
    """Every element of F_r whose Fitting part has degree <= bound."""
    fitting = list(enumerate_module_elements(context.fitting, degree_bound, cap))
    count = context.p**context.r * len(fitting)
    if count > cap:
        raise ResourceCapExceeded(f"{count} candidate elements, cap is {cap}")
    return [
        LieElement._new(context, linear, y)
        for linear in itertools.product(range(context.p), repeat=context.r)
        for y in fitting
    ]


def brute_force_solve(
    S: EquationSystem, degree_bound: int, cap: int = ENUMERATION_CAP
) -> List[Tuple[LieElement, ...]]:
    """
    All roots of S among the points with Fitting parts of degree <= bound.

    Raises ResourceCapExceeded if there are more than ``cap`` candidate
    points.
    """
    candidates = candidate_elements(S.context, degree_bound, cap)
    count = len(candidates) ** S.arity
    if count > cap:
        raise ResourceCapExceeded(f"{count} candidate points, cap is {cap}")
    log.debug("brute force over %d candidate points", count)
    return [
        point
        for point in itertools.product(candidates, repeat=S.arity)
        if all(evaluate(f, point, S.context).is_zero for f in S)
    ]
