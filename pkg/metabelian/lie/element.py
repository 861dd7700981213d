"""
Elements of F_r in normal form.

An element is stored as its linear part (coefficients of a1..ar) and its
Fitting part, a vector over the generators e_ij reduced modulo the Jacobi
relations. Reduction is linear, so sums and scalar multiples of normal forms
are normal forms; only brackets need reducing.
"""

import itertools
import warnings
from typing import Sequence

from metabelian.constants import LinearVector, Polynomial
from metabelian.exceptions import ConfigurationError, DimensionExceeded
from metabelian.modcore.field import as_matrix, rank_mod_p
from metabelian.modcore.polynomial import coefficient_value
from metabelian.modcore.vector import FreeModuleVector

STRUCTURAL = "structural"
FORMULA_L = "formula_L"
FORMULA_LFR = "formula_LFr"
FITTING_MODES = (STRUCTURAL, FORMULA_L, FORMULA_LFR)


class LieElement:
    """
    Element of the free metabelian Lie algebra F_r.

    Parameters
    ----------
    context: AlgebraContext
    linear: sequence of int, optional
        Coefficients of a1..ar. Defaults to zero.
    fitting: FreeModuleVector, optional
        Fitting part over the generators e_ij; reduced on construction.
    """

    __slots__ = ("context", "linear", "fitting")

    def __init__(self, context, linear: Sequence[int] = None, fitting=None):
        p = context.p
        if linear is None:
            linear = (0,) * context.r
        elif len(linear) != context.r:
            raise ConfigurationError(
                f"linear part needs {context.r} coefficients, received: {len(linear)}"
            )
        if fitting is None:
            fitting = FreeModuleVector.zero(context.ring, context.t)
        else:
            if not isinstance(fitting, FreeModuleVector):
                raise TypeError(
                    f"Expected FreeModuleVector, received: {type(fitting).__name__}"
                )
            if fitting.ring != context.ring:
                raise ConfigurationError("Fitting part over a different polynomial ring")
            fitting = context.fitting.reduce(fitting)
        self.context = context
        self.linear: LinearVector = tuple(int(c) % p for c in linear)
        self.fitting = fitting

    @classmethod
    def _new(cls, context, linear, fitting) -> "LieElement":
        # Trusted constructor: linear is reduced mod p, fitting in normal form.
        u = cls.__new__(cls)
        u.context = context
        u.linear = linear
        u.fitting = fitting
        return u

    @property
    def algebra(self):
        return self.context

    @property
    def is_zero(self) -> bool:
        return not any(self.linear) and self.fitting.is_zero

    def __bool__(self) -> bool:
        return not self.is_zero

    @property
    def is_fitting(self) -> bool:
        return not any(self.linear)

    def linear_form(self) -> Polynomial:
        """λ(u) = α1·x1 + ... + αr·xr."""
        return self.context.ring.linear_form(self.linear)

    def __eq__(self, other) -> bool:
        if not isinstance(other, LieElement):
            return NotImplemented
        return (
            self.context == other.context
            and self.linear == other.linear
            and self.fitting == other.fitting
        )

    def __hash__(self) -> int:
        return hash((self.linear, self.fitting))

    def __add__(self, other: "LieElement") -> "LieElement":
        self.context.check(other)
        p = self.context.p
        linear = tuple((a + b) % p for a, b in zip(self.linear, other.linear))
        return LieElement._new(self.context, linear, self.fitting + other.fitting)

    def __neg__(self) -> "LieElement":
        p = self.context.p
        linear = tuple((-a) % p for a in self.linear)
        return LieElement._new(self.context, linear, -self.fitting)

    def __sub__(self, other: "LieElement") -> "LieElement":
        return self + (-other)

    def __mul__(self, scalar: int) -> "LieElement":
        if not isinstance(scalar, int):
            return NotImplemented
        p = self.context.p
        scalar %= p
        linear = tuple((scalar * a) % p for a in self.linear)
        return LieElement._new(self.context, linear, self.fitting.scale(scalar))

    __rmul__ = __mul__

    def act(self, poly: Polynomial) -> "LieElement":
        """Module action u·f on a Fitting element."""
        if not self.is_fitting:
            raise ValueError("the module action is only defined on Fitting elements")
        return LieElement(self.context, None, self.fitting.scale(poly))

    def format(self) -> str:
        return format_element(self)

    def __repr__(self) -> str:
        return f"LieElement({self.format()})"


def left_normed(i: int, j: int, monom, prefix: str = "a") -> str:
    """``e_ij·x^monom`` as the left-normed bracket [[[a_i,a_j],a_k],...]."""
    text = f"[{prefix}{i},{prefix}{j}]"
    for k, e in enumerate(monom, start=1):
        for _ in range(e):
            text = f"[{text},{prefix}{k}]"
    return text


def _scaled(coefficient: int, text: str) -> str:
    return text if coefficient == 1 else f"{coefficient}*{text}"


def format_element(u: LieElement) -> str:
    """
    Canonical text of an element: linear terms, then Fitting terms as
    left-normed brackets, by component and descending degrevlex.
    """
    context = u.context
    p = context.p
    terms = [
        _scaled(c, f"a{i}") for i, c in enumerate(u.linear, start=1) if c
    ]
    for index, poly in u.fitting.entries:
        i, j = context.pairs[index]
        for monom, coeff in poly.terms():
            terms.append(_scaled(coefficient_value(coeff, p), left_normed(i, j, monom)))
    return " + ".join(terms) if terms else "0"


def bracket(u: LieElement, v: LieElement) -> LieElement:
    """
    [u, v] in normal form.

    The linear parts expand bilinearly into the e_ij, a Fitting part c
    bracketed with a linear part ℓ gives c·λ(ℓ), and the Fitting radical is
    abelian.
    """
    for w in (u, v):
        if not isinstance(w, LieElement):
            raise TypeError(f"Expected LieElement, received: {type(w).__name__}")
    context = u.context
    context.check(v)
    ring = context.ring
    p = context.p
    entries = {}
    for (i, j), index in zip(context.pairs, range(context.t)):
        c = (u.linear[i - 1] * v.linear[j - 1] - u.linear[j - 1] * v.linear[i - 1]) % p
        if c:
            entries[index] = ring.constant(c)
    fitting = (
        FreeModuleVector(ring, context.t, entries)
        + u.fitting.scale(v.linear_form())
        - v.fitting.scale(u.linear_form())
    )
    return LieElement(context, None, fitting)


def in_fitting(u, mode: str = STRUCTURAL) -> bool:
    """
    Whether u lies in the Fitting radical.

    Parameters
    ----------
    u: LieElement or ExtElement
    mode: str
        ``"structural"`` tests for a zero linear part. ``"formula_LFr"``
        evaluates ``[[u, a_i], u] = 0`` over the constants a_i.
        ``"formula_L"`` evaluates ``[[u, y], u] = 0`` over a finite probe
        set standing in for the quantifier ∀y.
    """
    algebra = u.algebra
    if mode == STRUCTURAL:
        return u.is_fitting
    elif mode == FORMULA_LFR:
        probes = [algebra.constant(i) for i in range(1, algebra.rank + 1)]
    elif mode == FORMULA_L:
        if not algebra.is_u_algebra:
            warnings.warn(
                "formula_L uses a finite probe set; on algebras with torsion in "
                "the Fitting module it may disagree with the structural test",
                UserWarning,
            )
        probes = algebra.fitting_probes()
    else:
        raise ValueError(f"mode must be one of {FITTING_MODES}, received: {mode}")
    return all(algebra.bracket(algebra.bracket(u, y), u).is_zero for y in probes)


def phi_eval(elements: Sequence, exhaustive: bool = False) -> bool:
    """
    Linear independence of the elements modulo the Fitting radical.

    Parameters
    ----------
    elements: sequence of LieElement or ExtElement
        n elements of one algebra, n at most its rank.
    exhaustive: bool, default False
        Evaluate the literal conjunction of ``¬Fit(Σ α_i·u_i)`` over all
        nonzero coefficient tuples instead of computing a rank.

    Returns
    -------
    bool
    """
    elements = list(elements)
    if not elements:
        return True
    algebra = elements[0].algebra
    n = len(elements)
    if n > algebra.rank:
        raise DimensionExceeded(
            f"cannot test {n} elements for independence in rank {algebra.rank}"
        )
    for u in elements[1:]:
        algebra.check(u)

    p = algebra.p
    if exhaustive:
        for coefficients in itertools.product(range(p), repeat=n):
            if not any(coefficients):
                continue
            combination = algebra.zero()
            for c, u in zip(coefficients, elements):
                if c:
                    combination = combination + u * c
            if in_fitting(combination, mode=FORMULA_LFR):
                return False
        return True
    matrix = as_matrix([u.linear for u in elements], p)
    return rank_mod_p(matrix, p) == n
