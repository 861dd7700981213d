"""
Graded dimensions of the Fitting radical.

The degree-d component of Fit(F_r), spanned by brackets of d generators, has
a basis of left-normed basic monomials ``[...[[a_i1, a_i2], a_i3], ..., a_id]``
with ``i1 > i2 <= i3 <= ... <= id``. In the module presentation these are the
elements of module degree d - 2.
"""

import itertools
from typing import Iterator, Tuple


def basic_monomials(r: int, d: int) -> Iterator[Tuple[int, ...]]:
    """Index words (i1, ..., id) of the left-normed basic monomials, d >= 2."""
    if d < 2:
        return
    for i1 in range(2, r + 1):
        for i2 in range(1, i1):
            for tail in itertools.combinations_with_replacement(range(i2, r + 1), d - 2):
                yield (i1, i2) + tail


def count_basic_monomials(r: int, d: int) -> int:
    return sum(1 for _ in basic_monomials(r, d))


def fitting_dimension(context, d: int) -> int:
    """k-dimension of the degree-d component of Fit(F_r)."""
    if d < 2:
        return 0
    return context.fitting.hilbert_count(d - 2)
