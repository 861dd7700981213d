"""
Points of a canonical system as R-module homomorphisms M → Fit(F_r).
"""

import itertools
import logging
from typing import List, NamedTuple, Optional, Tuple

from metabelian.constants import ENUMERATION_CAP
from metabelian.exceptions import ResourceCapExceeded
from metabelian.lie.context import AlgebraContext, algebra_context
from metabelian.lie.element import LieElement, format_element
from metabelian.modcore.presentation import (
    ModulePresentation,
    enumerate_module_elements,
)
from metabelian.modcore.vector import FreeModuleVector

log = logging.getLogger(__name__)


class HomPoint(NamedTuple):
    """
    A homomorphism by the images of the generators m_1..m_n, as vectors of
    the Fitting module of F_r.
    """

    context: AlgebraContext
    images: Tuple[FreeModuleVector, ...]

    def point(self) -> Tuple[LieElement, ...]:
        """The point (φ(m_1), ..., φ(m_n)) of the canonical system."""
        return tuple(LieElement(self.context, None, y) for y in self.images)

    def format(self) -> str:
        return "(" + ", ".join(format_element(u) for u in self.point()) + ")"


def is_homomorphism(
    M: ModulePresentation, images, context: AlgebraContext
) -> bool:
    """Whether every relation of M vanishes on the images."""
    fitting = context.fitting
    for row in M.relations:
        total = fitting.zero()
        for c, q in row.entries:
            total = total + images[c].scale(q)
        if not fitting.contains(total):
            return False
    return True


def homs_to_fitting(
    M: ModulePresentation,
    degree_bound: int,
    context: Optional[AlgebraContext] = None,
    cap: int = ENUMERATION_CAP,
) -> List[HomPoint]:
    """
    Every homomorphism M → Fit(F_r) whose generator images have coefficients
    of degree <= bound.

    Parameters
    ----------
    M: ModulePresentation
    degree_bound: int
    context: AlgebraContext, optional
        F_r; defaults to the rank of the ring of M.
    cap: int
        Maximum number of candidate image tuples.

    Returns
    -------
    list of HomPoint
    """
    if context is None:
        context = algebra_context(M.ring.p, M.ring.r)
    if context.ring != M.ring:
        raise ValueError("module and algebra over different polynomial rings")
    values = list(enumerate_module_elements(context.fitting, degree_bound, cap))
    count = len(values) ** M.n
    if count > cap:
        raise ResourceCapExceeded(f"{count} candidate image tuples, cap is {cap}")
    log.debug("%d candidate image tuples", count)
    return [
        HomPoint(context, images)
        for images in itertools.product(values, repeat=M.n)
        if is_homomorphism(M, images, context)
    ]
