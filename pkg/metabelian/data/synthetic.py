"""
Seeded synthetic inputs: random systems, systems with a planted root and a
hand-labelled corpus of module presentations.
"""

from typing import List, NamedTuple, Tuple

import numpy as np

from metabelian.equations.system import EquationSystem
from metabelian.io import parse_module
from metabelian.lie.context import AlgebraContext
from metabelian.lie.element import LieElement
from metabelian.lie.expression import (
    Bracket,
    Constant,
    LiePolynomial,
    Node,
    Variable,
    add,
    element_expression,
    evaluate,
    scale,
)
from metabelian.lie.sampling import random_element, random_vector
from metabelian.modcore.polynomial import PolynomialRing
from metabelian.modcore.presentation import ModulePresentation


class CorpusEntry(NamedTuple):
    name: str
    text: str
    torsion_free: bool
    rank: int

    @property
    def module(self) -> ModulePresentation:
        return parse_module(self.text)


# Ground truth labelled by hand: torsion-freeness and rank of each module.
MODULE_CORPUS = (
    CorpusEntry("free-1", "2 2 1\n", True, 1),
    CorpusEntry("free-2", "2 2 2\n", True, 2),
    CorpusEntry("free-3-p3", "3 2 3\n", True, 3),
    CorpusEntry("zero-generators", "2 2 0\n", True, 0),
    CorpusEntry("unit-relation", "2 2 1\n1\n", True, 0),
    CorpusEntry("free-1-r3", "2 3 1\n", True, 1),
    CorpusEntry("free-1-r1", "2 1 1\n", True, 1),
    CorpusEntry("ideal-2", "2 2 2\nx2; x1\n", True, 1),
    CorpusEntry("ideal-2-p3", "3 2 2\nx2; 2*x1\n", True, 1),
    CorpusEntry("koszul-2-p3", "3 2 2\nx1; x2\n", True, 1),
    CorpusEntry("graph-free", "2 2 2\n1; x1\n", True, 1),
    CorpusEntry(
        "ideal-3",
        "2 3 3\nx2; x1; 0\nx3; 0; x1\n0; x3; x2\n",
        True,
        1,
    ),
    CorpusEntry("fitting-r3", "2 3 3\nx3; x2; x1\n", True, 2),
    CorpusEntry("cyclic-x1", "2 2 1\nx1\n", False, 0),
    CorpusEntry("cyclic-x1-p3", "3 2 1\nx1\n", False, 0),
    CorpusEntry("cyclic-maximal", "2 2 1\nx1\nx2\n", False, 0),
    CorpusEntry("cyclic-square", "2 2 1\nx1^2\n", False, 0),
    CorpusEntry("cyclic-unit-shift", "2 2 1\nx1 + 1\n", False, 0),
    CorpusEntry("cyclic-x1-r1", "2 1 1\nx1\n", False, 0),
    CorpusEntry("mixed-torsion", "2 2 2\nx1; 0\n", False, 1),
    CorpusEntry("mixed-difference", "2 2 2\nx1; x1\n", False, 1),
    CorpusEntry("mixed-p3", "3 2 2\n0; x2\n", False, 1),
    CorpusEntry("diagonal-p3", "3 2 2\nx1; 0\n0; x2\n", False, 0),
)


def module_corpus() -> List[CorpusEntry]:
    return list(MODULE_CORPUS)


def random_module(
    p: int, r: int, n: int, n_relation: int, degree: int = 1, seed: int = 0
) -> ModulePresentation:
    """Presentation with random relation rows of degree <= degree."""
    rng = np.random.default_rng(seed)
    ring = PolynomialRing(p, r)
    rows = [random_vector(ring, n, degree, rng) for _ in range(n_relation)]
    return ModulePresentation(ring, n, rows)


def _random_term(context: AlgebraContext, arity: int, rng: np.random.Generator) -> Node:
    p = context.p
    x = Variable(int(rng.integers(1, arity + 1)))
    a = Constant(int(rng.integers(1, context.r + 1)))
    kind = int(rng.integers(0, 4))
    if kind == 0:
        term = x
    elif kind == 1:
        term = Bracket(x, a)
    elif kind == 2:
        term = Bracket(Bracket(x, a), Constant(int(rng.integers(1, context.r + 1))))
    else:
        term = Bracket(x, Variable(int(rng.integers(1, arity + 1))))
    return scale(int(rng.integers(1, p)), term, p)


def random_polynomial(
    context: AlgebraContext, arity: int, n_term: int, rng: np.random.Generator
) -> LiePolynomial:
    """A sum of small random bracket terms plus a random constant."""
    terms = [_random_term(context, arity, rng) for _ in range(n_term)]
    terms.append(element_expression(random_element(context, rng, degree=0)))
    return LiePolynomial(add(*terms), arity)


def random_system(
    context: AlgebraContext,
    arity: int,
    n_equation: int,
    n_term: int = 3,
    seed: int = 0,
) -> EquationSystem:
    rng = np.random.default_rng(seed)
    return EquationSystem(
        context,
        arity,
        [random_polynomial(context, arity, n_term, rng) for _ in range(n_equation)],
    )


def planted_system(
    context: AlgebraContext,
    arity: int,
    n_equation: int,
    n_term: int = 3,
    seed: int = 0,
) -> Tuple[EquationSystem, Tuple[LieElement, ...]]:
    """
    A random system together with a root: every equation f is replaced by
    f - f(point) for a random point.
    """
    rng = np.random.default_rng(seed)
    point = tuple(random_element(context, rng, degree=1) for _ in range(arity))
    polynomials = []
    for _ in range(n_equation):
        f = random_polynomial(context, arity, n_term, rng)
        value = evaluate(f, point, context)
        shifted = add(f.expression, scale(context.p - 1, element_expression(value), context.p))
        polynomials.append(LiePolynomial(shifted, arity))
    return EquationSystem(context, arity, polynomials), point
